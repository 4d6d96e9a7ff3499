"""量子核心: Pauli 串、量子态、CP 映射的 Kraus 与 χ 表示"""

from .channel_io import ChannelDocument, load_channel, parse_channel, save_channel, serialize_channel
from .channels import (
    ChiMatrix,
    QuantumChannel,
    apply_channel,
    chi_to_kraus,
    chi_to_ptm,
    kraus_to_chi,
    parameter_count,
)
from .pauli import PauliString, commutes, multiply_ignoring_phase, pauli_basis, pauli_index, pauli_labels, pauli_matrix
from .presets import ChannelPreset, preset_channel
from .random_channels import random_channel
from .states import (
    DensityMatrix,
    KetVector,
    bell_state,
    ket_from_operator,
    maximally_entangled,
    normalized_ket,
    product_ket,
    schmidt_rank,
    tensor_kets,
)

__all__ = [
    "ChannelDocument",
    "ChannelPreset",
    "ChiMatrix",
    "DensityMatrix",
    "KetVector",
    "PauliString",
    "QuantumChannel",
    "apply_channel",
    "bell_state",
    "chi_to_kraus",
    "chi_to_ptm",
    "commutes",
    "ket_from_operator",
    "kraus_to_chi",
    "load_channel",
    "maximally_entangled",
    "multiply_ignoring_phase",
    "normalized_ket",
    "parameter_count",
    "parse_channel",
    "pauli_basis",
    "pauli_index",
    "pauli_labels",
    "pauli_matrix",
    "preset_channel",
    "product_ket",
    "random_channel",
    "save_channel",
    "schmidt_rank",
    "serialize_channel",
    "tensor_kets",
]
