"""投影测量: 对易 Pauli 设置的共同本征投影与 Bell 态测量"""

import logging
from functools import reduce

import numpy as np
from pydantic import field_validator, model_validator

from qptlab.common.exceptions import InvalidArgumentError, SizeLimitError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL
from qptlab.core.pauli import PAULI_LETTERS, pauli_index
from qptlab.mub.eigenbasis import common_eigenbasis
from qptlab.mub.settings import MeasurementSetting

logger = logging.getLogger(__name__)

LOSS_LABEL = "loss"

MAX_TOTAL_QUBITS = 4


class ProjectiveMeasurement(FrozenArrayModel):
    """两两正交的投影算符组, 可附加损耗结果 (效应 I - ΣP)"""

    projectors: np.ndarray
    labels: tuple[str, ...]
    include_loss: bool = False

    @field_validator("projectors", mode="before")
    @classmethod
    def to_stack(cls, v):
        return frozen_array(np.array([np.asarray(p, dtype=complex) for p in v]))

    @model_validator(mode="after")
    def validate_projectors(self) -> "ProjectiveMeasurement":
        p = self.projectors
        if p.ndim != 3 or p.shape[1] != p.shape[2]:
            raise ValueError(f"投影算符组形状非法: {p.shape}")
        if len(self.labels) != p.shape[0] or len(set(self.labels)) != len(self.labels):
            raise ValueError("结果标签个数与投影算符不符或存在重复")
        if LOSS_LABEL in self.labels:
            raise ValueError(f"{LOSS_LABEL!r} 是保留的损耗结果标签")
        if np.max(np.abs(p - p.conj().transpose(0, 2, 1))) > TOL.psd:
            raise ValueError("投影算符不是厄米的")
        products = np.einsum("iab,jbc->ijac", p, p)
        for i in range(p.shape[0]):
            if np.max(np.abs(products[i, i] - p[i])) > TOL.psd:
                raise ValueError(f"第 {i} 个算符不是投影算符")
            for j in range(i + 1, p.shape[0]):
                if np.max(np.abs(products[i, j])) > TOL.psd:
                    raise ValueError(f"投影算符 {i} 与 {j} 不正交")
        slack = np.eye(p.shape[1]) - p.sum(axis=0)
        if np.linalg.eigvalsh((slack + slack.conj().T) / 2).min() < -TOL.psd:
            raise ValueError("投影算符之和超过单位算符")
        return self

    @property
    def dim(self) -> int:
        return self.projectors.shape[1]

    @property
    def outcome_count(self) -> int:
        """不含损耗结果的结果数"""
        return self.projectors.shape[0]

    @property
    def outcome_labels(self) -> tuple[str, ...]:
        return self.labels + ((LOSS_LABEL,) if self.include_loss else ())

    def with_loss(self, include_loss: bool = True) -> "ProjectiveMeasurement":
        return ProjectiveMeasurement(projectors=self.projectors, labels=self.labels, include_loss=include_loss)


def setting_to_measurement(setting: MeasurementSetting, include_loss: bool = False) -> ProjectiveMeasurement:
    """每个共同本征空间一个投影算符, 标签为符号向量"""
    basis = common_eigenbasis(setting)
    return ProjectiveMeasurement(
        projectors=[s.projector for s in basis.sectors],
        labels=tuple(s.label for s in basis.sectors),
        include_loss=include_loss,
    )


def _on_qubit(op: np.ndarray, qubit: int, total: int) -> np.ndarray:
    factors = [np.eye(2, dtype=complex)] * total
    factors[qubit] = op
    return reduce(np.kron, factors)


def cnot(control: int, target: int, total: int) -> np.ndarray:
    p0 = np.array([[1, 0], [0, 0]], dtype=complex)
    p1 = np.array([[0, 0], [0, 1]], dtype=complex)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    return _on_qubit(p0, control, total) + _on_qubit(p1, control, total) @ _on_qubit(x, target, total)


def hadamard(qubit: int, total: int) -> np.ndarray:
    h = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
    return _on_qubit(h, qubit, total)


def bell_circuit(n: int) -> np.ndarray:
    """先做 n 个 CNOT (系统 i -> 辅助 i+n), 再对系统比特做 Hadamard"""
    total = 2 * n
    u = np.eye(2 ** total, dtype=complex)
    for i in range(n):
        u = cnot(i, i + n, total) @ u
    for i in range(n):
        u = hadamard(i, total) @ u
    return u


def _error_label(index: int, n: int) -> str:
    """计算基结果 -> 被探测到的 Pauli 错误: 辅助比特位给 x, 系统比特位给 z"""
    total = 2 * n
    bits = [(index >> (total - 1 - q)) & 1 for q in range(total)]
    letters = []
    for i in range(n):
        z, x = bits[i], bits[i + n]
        letters.append(PAULI_LETTERS[{(0, 0): 0, (1, 0): 1, (1, 1): 2, (0, 1): 3}[(x, z)]])
    return "".join(letters)


def bell_measurement(n: int, include_loss: bool = False) -> ProjectiveMeasurement:
    """n 对系统-辅助比特的 Bell 态测量 (计算基测量经 Bell 电路拉回)

    结果按其探测到的系统 Pauli 错误串排序并标记, 即第 m 个结果对应 (σ_m ⊗ I)|Φ+>^⊗n.
    """
    if n < 1:
        raise InvalidArgumentError(f"系统比特数必须为正, 实际 {n}")
    if 2 * n > MAX_TOTAL_QUBITS:
        raise SizeLimitError(
            f"Bell 测量需要 {2 * n} 个比特, 超过精确模拟上限 {MAX_TOTAL_QUBITS}",
            detail={"n": n, "limit": MAX_TOTAL_QUBITS},
        )
    u = bell_circuit(n)
    outcomes = []
    for k in range(4 ** n):
        vec = u[k].conj()
        outcomes.append((pauli_index(_error_label(k, n)), _error_label(k, n), np.outer(vec, vec.conj())))
    outcomes.sort(key=lambda item: item[0])
    return ProjectiveMeasurement(
        projectors=[proj for _, _, proj in outcomes],
        labels=tuple(label for _, label, _ in outcomes),
        include_loss=include_loss,
    )
