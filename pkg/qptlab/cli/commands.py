"""命令实现: 每个命令返回要写出的完整文本"""

import logging

from dependency_injector.wiring import Provide, inject

from qptlab.cli.run_config import RunConfig
from qptlab.common.enums import CommandName, OutputFormat
from qptlab.config import LabConfig
from qptlab.containers.app_container import AppContainer
from qptlab.core.channels import kraus_to_chi
from qptlab.mub.partition import partition_dump, pauli_partition
from qptlab.qpt.design import build_design_matrix, design_to_csv
from qptlab.qpt.dump import PlanDump, SimulationReport, chi_to_csv, sweep_to_csv
from qptlab.qpt.plan import build_plan
from qptlab.qpt.reconstruct import reconstruct_chi
from qptlab.qpt.relaxation import extract_relaxation
from qptlab.qpt.simulate import simulate_experiment
from qptlab.qpt.sweep import precision_sweep
from qptlab.resources.accounting import GateModel, ResourceTable, comparison_table
from qptlab.resources.table_csv import rows_to_csv
from qptlab.utils.thread_pool import TrialPool

logger = logging.getLogger(__name__)


def _json(model) -> str:
    return model.model_dump_json(indent=2) + "\n"


@inject
def cmd_plan(rc: RunConfig, config: LabConfig = Provide[AppContainer.config]) -> str:
    plan = build_plan(rc.scheme, rc.single_n, config.max_exact_qubits)
    if rc.output_format == OutputFormat.CSV:
        return design_to_csv(build_design_matrix(plan))
    return _json(PlanDump.from_plan(plan))


@inject
def cmd_simulate_reconstruct(rc: RunConfig, config: LabConfig = Provide[AppContainer.config]) -> str:
    """模拟 -> 重构; 信道已知时报告与真实 χ 的最大偏差"""
    plan = build_plan(rc.scheme, rc.single_n, config.max_exact_qubits)
    channel = rc.target_channel(plan.n)
    data = simulate_experiment(plan, channel, shots=rc.shots_per_config, seed=rc.seed)
    estimate = reconstruct_chi(build_design_matrix(plan), data.frequencies())
    relaxation = None
    if rc.relaxation_time is not None:
        relaxation = extract_relaxation(estimate, rc.relaxation_time)
    if rc.output_format == OutputFormat.CSV:
        return chi_to_csv(estimate.chi)
    report = SimulationReport.build(
        plan, rc.channel_label, data, estimate, truth=kraus_to_chi(channel), relaxation=relaxation,
    )
    logger.info(f"simulate {plan.scheme.value} n={plan.n}: max error {report.max_error:.3e}")
    return _json(report)


def cmd_resources(rc: RunConfig) -> str:
    rows = comparison_table(rc.n, GateModel(locality=rc.locality), rc.epsilon, include_variants=rc.variants)
    if rc.output_format == OutputFormat.CSV:
        return rows_to_csv(rows)
    return _json(ResourceTable(epsilon=rc.epsilon, locality=rc.locality, rows=rows))


@inject
def cmd_precision_sweep(
    rc: RunConfig,
    config: LabConfig = Provide[AppContainer.config],
    pool: TrialPool = Provide[AppContainer.trial_pool],
) -> str:
    with pool:
        plan = build_plan(rc.scheme, rc.single_n, config.max_exact_qubits)
        report = precision_sweep(plan, rc.target_channel(plan.n), rc.shots, rc.trials, rc.seed, pool)
    if rc.output_format == OutputFormat.CSV:
        return sweep_to_csv(report)
    return _json(report)


def cmd_partition(rc: RunConfig) -> str:
    return partition_dump(pauli_partition(rc.m))


COMMANDS = {
    CommandName.PLAN: cmd_plan,
    CommandName.SIMULATE: cmd_simulate_reconstruct,
    CommandName.RESOURCES: cmd_resources,
    CommandName.SWEEP: cmd_precision_sweep,
    CommandName.PARTITION: cmd_partition,
}
