"""纯态与密度矩阵"""

from collections.abc import Sequence
from functools import reduce

import numpy as np
from pydantic import field_validator, model_validator

from qptlab.common.exceptions import DimensionMismatchError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL


_SINGLE_KETS = {
    "0": np.array([1, 0], dtype=complex),
    "1": np.array([0, 1], dtype=complex),
    "+": np.array([1, 1], dtype=complex) / np.sqrt(2),
    "-": np.array([1, -1], dtype=complex) / np.sqrt(2),
    "+i": np.array([1, 1j], dtype=complex) / np.sqrt(2),
    "-i": np.array([1, -1j], dtype=complex) / np.sqrt(2),
}


def _qubits_for_dim(dim: int) -> int:
    m = int(round(np.log2(dim))) if dim > 0 else -1
    if m < 1 or 2 ** m != dim:
        raise ValueError(f"维度 {dim} 不是 2 的正整数次幂")
    return m


class KetVector(FrozenArrayModel):
    """归一化纯态振幅"""

    amplitudes: np.ndarray

    def __init__(self, amplitudes, **data):
        super().__init__(amplitudes=amplitudes, **data)

    @field_validator("amplitudes", mode="before")
    @classmethod
    def to_array(cls, v):
        return frozen_array(np.asarray(v, dtype=complex).reshape(-1))

    @model_validator(mode="after")
    def validate_norm(self) -> "KetVector":
        _qubits_for_dim(self.amplitudes.size)
        norm_sq = float(np.vdot(self.amplitudes, self.amplitudes).real)
        if abs(norm_sq - 1.0) > TOL.hermitian:
            raise ValueError(f"态矢量未归一化: |ψ|² = {norm_sq!r}")
        return self

    @property
    def qubit_count(self) -> int:
        return _qubits_for_dim(self.amplitudes.size)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def density(self) -> "DensityMatrix":
        return DensityMatrix(self.projector())


class DensityMatrix(FrozenArrayModel):
    """密度矩阵, 允许迹小于 1 (非保迹信道的输出)"""

    entries: np.ndarray

    def __init__(self, entries, **data):
        super().__init__(entries=entries, **data)

    @field_validator("entries", mode="before")
    @classmethod
    def to_array(cls, v):
        return frozen_array(v)

    @model_validator(mode="after")
    def validate_state(self) -> "DensityMatrix":
        rho = self.entries
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValueError(f"密度矩阵必须是方阵, 实际形状 {rho.shape}")
        _qubits_for_dim(rho.shape[0])
        if np.max(np.abs(rho - rho.conj().T)) > TOL.hermitian:
            raise ValueError("密度矩阵不是厄米的")
        min_eig = float(np.linalg.eigvalsh(rho).min())
        if min_eig < -TOL.psd:
            raise ValueError(f"密度矩阵存在负本征值 {min_eig!r}")
        if float(np.trace(rho).real) > 1.0 + TOL.hermitian:
            raise ValueError("密度矩阵的迹大于 1")
        return self

    @property
    def qubit_count(self) -> int:
        return _qubits_for_dim(self.entries.shape[0])

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    @classmethod
    def maximally_mixed(cls, qubit_count: int) -> "DensityMatrix":
        d = 2 ** qubit_count
        return cls(np.eye(d, dtype=complex) / d)


def normalized_ket(amplitudes) -> KetVector:
    vec = np.asarray(amplitudes, dtype=complex).reshape(-1)
    return KetVector(vec / np.linalg.norm(vec))


def product_ket(tokens: Sequence[str]) -> KetVector:
    """单比特标签 (0, 1, +, -, +i, -i) 的直积态"""
    try:
        vectors = [_SINGLE_KETS[t] for t in tokens]
    except KeyError as e:
        raise ValueError(f"未知单比特态标签: {e.args[0]}") from e
    return KetVector(reduce(np.kron, vectors))


def tensor_kets(*kets: KetVector) -> KetVector:
    return KetVector(reduce(np.kron, (k.amplitudes for k in kets)))


def ket_from_operator(m: np.ndarray) -> KetVector:
    """(M ⊗ I)|Φ+⟩, 系统比特在前、辅助比特在后"""
    m = np.asarray(m, dtype=complex)
    d = m.shape[0]
    return KetVector(m.reshape(-1) / np.sqrt(d))


def maximally_entangled(n: int) -> KetVector:
    """|Φ+⟩^⊗n, 第 i 个系统比特与第 i+n 个辅助比特成对"""
    return ket_from_operator(np.eye(2 ** n, dtype=complex))


def bell_state(kind: str) -> KetVector:
    """四个 Bell 态: phi+, phi-, psi+, psi-"""
    s = 1 / np.sqrt(2)
    table = {
        "phi+": [s, 0, 0, s],
        "phi-": [s, 0, 0, -s],
        "psi+": [0, s, s, 0],
        "psi-": [0, s, -s, 0],
    }
    if kind not in table:
        raise ValueError(f"未知 Bell 态: {kind}")
    return KetVector(table[kind])


def schmidt_rank(ket: KetVector, cut: int, atol: float = 1e-10) -> int:
    """前 cut 个比特与其余比特之间的 Schmidt 秩"""
    m = ket.qubit_count
    if not 0 < cut < m:
        raise DimensionMismatchError(f"切分位置 {cut} 超出 1..{m - 1}")
    mat = ket.amplitudes.reshape(2 ** cut, 2 ** (m - cut))
    return int(np.sum(np.linalg.svd(mat, compute_uv=False) > atol))
