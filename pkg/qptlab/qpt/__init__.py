"""过程层析方案: 方案构造、设计矩阵、模拟、重构与弛豫分析"""

from .dcqd import DcqdParameters, dcqd_configs, product_state_variant
from .design import (
    DesignMatrix,
    build_design_matrix,
    chi_to_params,
    design_from_csv,
    design_matrix_for_configs,
    design_to_csv,
    parameter_labels,
    params_to_chi,
)
from .dump import PlanDump, SimulationReport, chi_from_csv, chi_to_csv, sweep_points_from_csv, sweep_to_csv
from .experiment import Config, ExperimentPlan, planned_config_count, reported_config_count
from .plan import build_plan
from .reconstruct import ChiEstimate, reconstruct_chi
from .relaxation import RelaxationTimes, extract_relaxation
from .simulate import SimulatedData, simulate_experiment
from .sweep import SweepPoint, SweepReport, precision_sweep, validate_sweep

__all__ = [
    "ChiEstimate",
    "Config",
    "DcqdParameters",
    "DesignMatrix",
    "ExperimentPlan",
    "PlanDump",
    "RelaxationTimes",
    "SimulatedData",
    "SimulationReport",
    "SweepPoint",
    "SweepReport",
    "build_design_matrix",
    "build_plan",
    "chi_from_csv",
    "chi_to_csv",
    "chi_to_params",
    "dcqd_configs",
    "design_from_csv",
    "design_matrix_for_configs",
    "design_to_csv",
    "extract_relaxation",
    "parameter_labels",
    "params_to_chi",
    "planned_config_count",
    "precision_sweep",
    "product_state_variant",
    "reconstruct_chi",
    "reported_config_count",
    "simulate_experiment",
    "sweep_points_from_csv",
    "sweep_to_csv",
    "validate_sweep",
]
