"""抽象 POVM: 只给出效应算符, 不构造扩张电路"""

import logging
from functools import reduce
from itertools import product

import numpy as np
from pydantic import field_validator, model_validator

from qptlab.common.exceptions import InvalidArgumentError, RankDeficientError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL
from qptlab.core.pauli import pauli_matrix
from qptlab.measurement.projective import LOSS_LABEL

logger = logging.getLogger(__name__)

# 正四面体顶点, 单比特 SIC POVM 的 Bloch 向量
TETRAHEDRON = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]]) / np.sqrt(3)


def effect_span_rank(effects: np.ndarray, rtol: float = TOL.rank) -> int:
    """厄米效应算符在实数域上张成空间的维数"""
    flat = effects.reshape(effects.shape[0], -1)
    real = np.hstack([flat.real, flat.imag])
    s = np.linalg.svd(real, compute_uv=False)
    return int(np.sum(s > rtol * s[0])) if s.size else 0


class PovmMeasurement(FrozenArrayModel):
    """半正定效应算符组, 和为单位算符"""

    effects: np.ndarray
    labels: tuple[str, ...]
    include_loss: bool = False

    @field_validator("effects", mode="before")
    @classmethod
    def to_stack(cls, v):
        return frozen_array(np.array([np.asarray(e, dtype=complex) for e in v]))

    @model_validator(mode="after")
    def validate_effects(self) -> "PovmMeasurement":
        f = self.effects
        if f.ndim != 3 or f.shape[1] != f.shape[2]:
            raise ValueError(f"效应算符组形状非法: {f.shape}")
        if len(self.labels) != f.shape[0] or len(set(self.labels)) != len(self.labels):
            raise ValueError("结果标签个数与效应算符不符或存在重复")
        if np.max(np.abs(f - f.conj().transpose(0, 2, 1))) > TOL.psd:
            raise ValueError("效应算符不是厄米的")
        if np.linalg.eigvalsh(f).min() < -TOL.psd:
            raise ValueError("效应算符不是半正定的")
        if np.max(np.abs(f.sum(axis=0) - np.eye(f.shape[1]))) > TOL.psd:
            raise ValueError("效应算符之和不是单位算符")
        return self

    @property
    def dim(self) -> int:
        return self.effects.shape[1]

    @property
    def outcome_count(self) -> int:
        return self.effects.shape[0]

    @property
    def outcome_labels(self) -> tuple[str, ...]:
        return self.labels + ((LOSS_LABEL,) if self.include_loss else ())

    @property
    def informationally_complete(self) -> bool:
        return effect_span_rank(self.effects) == self.dim ** 2

    def with_loss(self, include_loss: bool = True) -> "PovmMeasurement":
        return PovmMeasurement(effects=self.effects, labels=self.labels, include_loss=include_loss)



def tetrahedral_povm(qubit_count: int = 2, include_loss: bool = False) -> PovmMeasurement:
    """各比特上四面体 SIC POVM 的张量积, 共 4^m 个结果

    单比特效应 E_a = (I + r_a·σ)/4, r_a 为正四面体顶点. 对偶算符 (I + 3 r_a·σ)/2
    的 Frobenius 范数平方为 5, 两比特时 χ 线性反演的总方差为 (25 - tr ρ²)/N.
    """
    if qubit_count < 1:
        raise InvalidArgumentError(f"比特数必须为正, 实际 {qubit_count}")
    sigma = np.array([pauli_matrix(p) for p in "XYZ"])
    single = [(np.eye(2) + np.einsum("a,abc->bc", r, sigma)) / 4 for r in TETRAHEDRON]

    effects, labels = [], []
    for idx in product(range(len(single)), repeat=qubit_count):
        effects.append(reduce(np.kron, (single[i] for i in idx)))
        labels.append("t" + "".join(str(i) for i in idx))

    povm = PovmMeasurement(effects=effects, labels=tuple(labels), include_loss=include_loss)
    if not povm.informationally_complete:
        raise RankDeficientError(
            "四面体 POVM 不是信息完备的",
            detail={"span_rank": effect_span_rank(povm.effects)},
        )
    logger.debug(f"built {povm.outcome_count}-outcome tetrahedral POVM on {qubit_count} qubit(s)")
    return povm
