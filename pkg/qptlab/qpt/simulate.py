"""按实验方案模拟: 制备输入, 作用 Λ ⊗ id, 测量, 可选抽样"""

import logging

import numpy as np

from qptlab.common.exceptions import DimensionMismatchError
from qptlab.common.model import FrozenArrayModel
from qptlab.core.channels import QuantumChannel, apply_channel
from qptlab.core.states import DensityMatrix
from qptlab.measurement.distribution import OutcomeDistribution, config_seed, outcome_probabilities, sample_outcomes
from qptlab.qpt.experiment import ExperimentPlan

logger = logging.getLogger(__name__)


class SimulatedData(FrozenArrayModel):
    """按配置顺序排列的结果分布"""

    config_labels: tuple[str, ...]
    distributions: tuple[OutcomeDistribution, ...]
    outcome_counts: tuple[int, ...]
    shots: int | None = None
    seed: int | None = None

    def frequencies(self) -> np.ndarray:
        """与设计矩阵行对齐的频率向量 (不含损耗结果)"""
        return np.concatenate([
            d.frequencies()[:k] for d, k in zip(self.distributions, self.outcome_counts)
        ])

    def probabilities(self) -> np.ndarray:
        return np.concatenate([
            d.probabilities[:k] for d, k in zip(self.distributions, self.outcome_counts)
        ])


def exact_distributions(plan: ExperimentPlan, channel: QuantumChannel) -> list[OutcomeDistribution]:
    if channel.qubit_count != plan.n:
        raise DimensionMismatchError(
            f"信道作用于 {channel.qubit_count} 个比特, 方案需要 {plan.n} 个",
            detail={"channel_qubits": channel.qubit_count, "n": plan.n},
        )
    extended = channel.extend(plan.simulated_ancillas)
    out = []
    for config in plan.configs:
        rho_out = apply_channel(extended, DensityMatrix(config.density()))
        out.append(outcome_probabilities(config.measurement, rho_out))
    return out


def sample_distributions(
    distributions: list[OutcomeDistribution], shots: int, seed: int
) -> list[OutcomeDistribution]:
    """第 i 个配置使用种子 seed ^ i"""
    return [sample_outcomes(d, shots, config_seed(seed, i)) for i, d in enumerate(distributions)]


def simulate_experiment(
    plan: ExperimentPlan,
    channel: QuantumChannel,
    shots: int | None = None,
    seed: int = 0,
) -> SimulatedData:
    """shots 为 None 时返回精确概率, 否则每个配置抽样 shots 次"""
    dists = exact_distributions(plan, channel)
    if shots is not None:
        dists = sample_distributions(dists, shots, seed)
    logger.debug(f"simulated {plan.scheme.value} n={plan.n}, shots={shots}, seed={seed}")
    return SimulatedData(
        config_labels=tuple(c.label for c in plan.configs),
        distributions=tuple(dists),
        outcome_counts=plan.outcome_counts,
        shots=shots,
        seed=None if shots is None else seed,
    )
