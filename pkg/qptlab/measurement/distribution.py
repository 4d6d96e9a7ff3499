"""Born 规则结果分布与多项式抽样"""

import numpy as np
from pydantic import field_validator, model_validator

from qptlab.common.exceptions import DimensionMismatchError, InvalidArgumentError, MeasurementError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL
from qptlab.core.states import DensityMatrix
from qptlab.measurement.povm import PovmMeasurement
from qptlab.measurement.projective import ProjectiveMeasurement

CLIP_TOL = 1e-12

Measurement = ProjectiveMeasurement | PovmMeasurement


class OutcomeDistribution(FrozenArrayModel):
    """一次配置的结果概率, 抽样后附带计数"""

    probabilities: np.ndarray
    labels: tuple[str, ...]
    counts: np.ndarray | None = None
    shots: int | None = None

    @field_validator("probabilities", mode="before")
    @classmethod
    def to_real(cls, v):
        return frozen_array(v, dtype=float)

    @field_validator("counts", mode="before")
    @classmethod
    def to_counts(cls, v):
        return None if v is None else frozen_array(v, dtype=np.int64)

    @model_validator(mode="after")
    def validate_distribution(self) -> "OutcomeDistribution":
        p = self.probabilities
        if p.ndim != 1 or p.size != len(self.labels):
            raise ValueError("概率向量长度与标签个数不符")
        if p.min() < -CLIP_TOL or p.max() > 1 + CLIP_TOL:
            raise ValueError("概率超出 [0, 1]")
        if abs(float(p.sum()) - 1.0) > TOL.probability:
            raise ValueError(f"概率之和 {float(p.sum())!r} 不为 1")
        if (self.counts is None) != (self.shots is None):
            raise ValueError("counts 与 shots 必须同时给出")
        if self.counts is not None:
            if self.counts.shape != p.shape or self.counts.min() < 0:
                raise ValueError("计数向量非法")
            if int(self.counts.sum()) != self.shots:
                raise ValueError(f"计数之和 {int(self.counts.sum())} 不等于抽样次数 {self.shots}")
        return self

    @property
    def is_sampled(self) -> bool:
        return self.counts is not None

    def frequencies(self) -> np.ndarray:
        """抽样频率; 精确模式下即为概率"""
        if self.counts is None:
            return self.probabilities
        return self.counts / self.shots


def outcome_probabilities(meas: Measurement, rho: DensityMatrix) -> OutcomeDistribution:
    """p_i = tr(E_i ρ); [-1e-12, 0) 截断为 0, 更负的值视为错误; 损耗结果承担 1 - Σp"""
    if meas.dim != rho.dim:
        raise DimensionMismatchError(
            f"测量维度 {meas.dim} 与态维度 {rho.dim} 不一致",
            detail={"measurement_dim": meas.dim, "state_dim": rho.dim},
        )
    effects = meas.projectors if isinstance(meas, ProjectiveMeasurement) else meas.effects
    p = np.einsum("kab,ba->k", effects, rho.entries).real
    if p.min() < -CLIP_TOL:
        raise MeasurementError(f"出现负概率 {float(p.min())!r}", detail={"min": float(p.min())})
    p = np.clip(p, 0.0, None)
    if meas.include_loss:
        loss = 1.0 - float(p.sum())
        if loss < -TOL.probability:
            raise MeasurementError(f"结果概率之和 {float(p.sum())!r} 超过 1")
        p = np.append(p, max(loss, 0.0))
    elif abs(float(p.sum()) - 1.0) > TOL.probability:
        raise MeasurementError(
            f"结果概率之和 {float(p.sum())!r} 不为 1, 非保迹输出需要损耗结果",
            detail={"total": float(p.sum())},
        )
    return OutcomeDistribution(probabilities=p, labels=meas.outcome_labels)


def sample_outcomes(dist: OutcomeDistribution, shots: int, seed: int | np.random.SeedSequence) -> OutcomeDistribution:
    """固定种子的多项式抽样"""
    if shots < 1:
        raise InvalidArgumentError(f"抽样次数必须为正, 实际 {shots}")
    rng = np.random.default_rng(seed)
    p = dist.probabilities / dist.probabilities.sum()
    counts = rng.multinomial(shots, p)
    return OutcomeDistribution(probabilities=dist.probabilities, labels=dist.labels, counts=counts, shots=shots)


def config_seed(seed: int, index: int) -> int:
    """第 index 个配置的随机流种子"""
    return seed ^ index


def trial_seed(seed: int, *keys: int) -> int:
    """由 (seed, keys...) 派生的 64 位种子, 与执行顺序无关"""
    return int(np.random.SeedSequence([seed, *keys]).generate_state(1, dtype=np.uint64)[0])
