"""精度扫描: 不同抽样次数下重复重构, 拟合误差随 N 的对数斜率"""

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy import stats

from qptlab.common.enums import SchemeTag
from qptlab.common.exceptions import InvalidArgumentError
from qptlab.config import SweepPoolConfig
from qptlab.core.channels import QuantumChannel, kraus_to_chi
from qptlab.measurement.distribution import trial_seed
from qptlab.qpt.design import build_design_matrix
from qptlab.qpt.experiment import ExperimentPlan
from qptlab.qpt.reconstruct import reconstruct_chi
from qptlab.qpt.simulate import SimulatedData, exact_distributions, sample_distributions
from qptlab.task.traceid import get_traceid, set_traceid, trial_traceid
from qptlab.utils.thread_pool import TrialPool

logger = logging.getLogger(__name__)

MIN_SHOT_VALUES = 4
MIN_DECADES = 2
MIN_TRIALS = 20


class SweepPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    shots: int = Field(..., ge=1, description="每个配置的抽样次数")
    trials: int = Field(..., ge=1, description="重复次数")
    rms_error: float = Field(..., ge=0, description="所有试验与元素上 |χ̂ - χ| 的均方根")
    element_std: float = Field(..., ge=0, description="逐元素标准差的均方根")


class SweepReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    scheme: SchemeTag
    n: int
    seed: int
    points: list[SweepPoint]
    slope: float = Field(..., description="log10(误差) 对 log10(N) 的斜率")
    slope_stderr: float = Field(..., description="斜率的标准误差")
    intercept: float


def validate_sweep(shots_values: list[int], trials: int) -> list[int]:
    """返回去重排序后的抽样次数; 重复值只算一个"""
    shots_values = sorted(set(shots_values))
    if len(shots_values) < MIN_SHOT_VALUES:
        raise InvalidArgumentError(f"精度扫描至少需要 {MIN_SHOT_VALUES} 个抽样次数, 实际 {len(shots_values)}")
    if min(shots_values) < 1:
        raise InvalidArgumentError("抽样次数必须为正")
    if max(shots_values) < min(shots_values) * 10 ** MIN_DECADES:
        raise InvalidArgumentError(f"抽样次数至少需要跨越 {MIN_DECADES} 个数量级")
    if trials < MIN_TRIALS:
        raise InvalidArgumentError(f"每个抽样次数至少需要 {MIN_TRIALS} 次重复, 实际 {trials}")
    return shots_values


def precision_sweep(
    plan: ExperimentPlan,
    channel: QuantumChannel,
    shots_values: list[int],
    trials: int,
    seed: int = 0,
    pool: TrialPool | None = None,
) -> SweepReport:
    """每个 (N, trial) 的种子由 SeedSequence([seed, N, trial]) 派生, 结果与线程调度无关"""
    shots_values = validate_sweep(shots_values, trials)
    design = build_design_matrix(plan)
    truth = kraus_to_chi(channel).entries
    exact = exact_distributions(plan, channel)
    run_id = get_traceid()

    def run_trial(task: tuple[int, int]) -> np.ndarray:
        shots, trial = task
        set_traceid(trial_traceid(run_id, shots, trial))
        dists = sample_distributions(exact, shots, trial_seed(seed, shots, trial))
        data = SimulatedData(
            config_labels=tuple(c.label for c in plan.configs),
            distributions=tuple(dists),
            outcome_counts=plan.outcome_counts,
            shots=shots,
            seed=seed,
        )
        return reconstruct_chi(design, data.frequencies()).chi.entries - truth

    tasks = [(shots, trial) for shots in shots_values for trial in range(trials)]
    own_pool = pool is None
    pool = pool or TrialPool(SweepPoolConfig())
    try:
        errors = pool.map_ordered(run_trial, tasks)
    finally:
        if own_pool:
            pool.shutdown()

    points = []
    for i, shots in enumerate(shots_values):
        errs = np.array(errors[i * trials:(i + 1) * trials])
        rms = float(np.sqrt(np.mean(np.abs(errs) ** 2)))
        element_var = np.var(errs, axis=0, ddof=1)
        points.append(SweepPoint(
            shots=shots, trials=trials, rms_error=rms, element_std=float(np.sqrt(np.mean(element_var))),
        ))
        logger.info(f"sweep {plan.scheme.value} N={shots}: rms={rms:.4e}")

    fit = stats.linregress(np.log10(shots_values), np.log10([p.rms_error for p in points]))
    return SweepReport(
        scheme=plan.scheme,
        n=plan.n,
        seed=seed,
        points=points,
        slope=float(fit.slope),
        slope_stderr=float(fit.stderr),
        intercept=float(fit.intercept),
    )
