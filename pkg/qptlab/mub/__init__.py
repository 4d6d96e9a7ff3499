"""互无偏基与 Pauli 群对易划分"""

from .eigenbasis import (
    CommonEigenbasis,
    EigenSector,
    MubFamily,
    common_eigenbasis,
    max_unbiasedness_deviation,
    mub_family,
    two_qubit_mub,
)
from .partition import TWO_QUBIT_CLASSES, check_partition, partition_dump, pauli_partition
from .settings import MeasurementSetting, gf2_rank, symplectic_vector

__all__ = [
    "CommonEigenbasis",
    "EigenSector",
    "MeasurementSetting",
    "MubFamily",
    "TWO_QUBIT_CLASSES",
    "check_partition",
    "common_eigenbasis",
    "gf2_rank",
    "max_unbiasedness_deviation",
    "mub_family",
    "partition_dump",
    "pauli_partition",
    "symplectic_vector",
    "two_qubit_mub",
]
