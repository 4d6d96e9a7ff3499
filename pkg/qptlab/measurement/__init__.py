"""测量: 投影测量、抽象 POVM、结果分布与门数估计"""

from .cost import measurement_cost, pauli_string_cost, scheme_cost, setting_cost
from .distribution import (
    Measurement,
    OutcomeDistribution,
    config_seed,
    outcome_probabilities,
    sample_outcomes,
    trial_seed,
)
from .dump import OutcomeRecord, records_from_csv, records_to_csv
from .povm import TETRAHEDRON, PovmMeasurement, effect_span_rank, tetrahedral_povm
from .projective import LOSS_LABEL, ProjectiveMeasurement, bell_circuit, bell_measurement, setting_to_measurement

__all__ = [
    "LOSS_LABEL",
    "TETRAHEDRON",
    "Measurement",
    "OutcomeDistribution",
    "OutcomeRecord",
    "PovmMeasurement",
    "ProjectiveMeasurement",
    "bell_circuit",
    "bell_measurement",
    "config_seed",
    "effect_span_rank",
    "measurement_cost",
    "outcome_probabilities",
    "pauli_string_cost",
    "records_from_csv",
    "records_to_csv",
    "sample_outcomes",
    "scheme_cost",
    "setting_cost",
    "setting_to_measurement",
    "tetrahedral_povm",
    "trial_seed",
]
