"""完全正映射: Kraus 表示与 χ (过程矩阵) 表示

χ 的定义: Λ(ρ) = Σ_mn χ_mn σ_m ρ σ_n†, σ 为不归一化的 Pauli 基.
非保迹映射 (ΣK†K ≺ I) 与保迹映射同等对待, 不做 Hilbert 空间扩张.
"""

import logging

import numpy as np
from pydantic import ValidationError, field_validator, model_validator

from qptlab.common.exceptions import DimensionMismatchError, UnphysicalChiError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL
from qptlab.core.pauli import pauli_basis, pauli_index, pauli_labels
from qptlab.core.states import DensityMatrix

logger = logging.getLogger(__name__)


class QuantumChannel(FrozenArrayModel):
    """Kraus 表示的 CP 映射, kraus_operators 形状为 (r, 2^m, 2^m)"""

    kraus_operators: np.ndarray
    qubit_count: int

    @field_validator("kraus_operators", mode="before")
    @classmethod
    def to_stack(cls, v):
        arr = np.array([np.asarray(k, dtype=complex) for k in v], dtype=complex)
        if arr.ndim != 3 or arr.shape[0] == 0:
            raise ValueError("kraus_operators 必须是非空的方阵列表")
        return frozen_array(arr)

    @model_validator(mode="after")
    def validate_cp_bound(self) -> "QuantumChannel":
        d = 2 ** self.qubit_count
        if self.qubit_count < 1 or self.kraus_operators.shape[1:] != (d, d):
            raise ValueError(
                f"Kraus 算符形状 {self.kraus_operators.shape[1:]} 与比特数 {self.qubit_count} 不符")
        slack = np.eye(d) - self.completeness()
        min_eig = float(np.linalg.eigvalsh((slack + slack.conj().T) / 2).min())
        if min_eig < -TOL.psd:
            raise ValueError(f"ΣK†K 超过单位算符, I-ΣK†K 的最小本征值为 {min_eig!r}")
        return self

    @classmethod
    def from_kraus(cls, kraus_operators) -> "QuantumChannel":
        ops = [np.asarray(k, dtype=complex) for k in kraus_operators]
        d = ops[0].shape[0]
        return cls(kraus_operators=ops, qubit_count=int(round(np.log2(d))))

    @classmethod
    def identity(cls, qubit_count: int = 1) -> "QuantumChannel":
        return cls(kraus_operators=[np.eye(2 ** qubit_count)], qubit_count=qubit_count)

    @property
    def dim(self) -> int:
        return 2 ** self.qubit_count

    def completeness(self) -> np.ndarray:
        """ΣK†K"""
        k = self.kraus_operators
        return np.einsum("kba,kbc->ac", k.conj(), k)

    def is_trace_preserving(self, atol: float = TOL.psd) -> bool:
        return bool(np.max(np.abs(self.completeness() - np.eye(self.dim))) <= atol)

    def trace_deficit(self) -> float:
        """最坏输入下的迹损失 1 - λ_min(ΣK†K)"""
        comp = self.completeness()
        return float(1.0 - np.linalg.eigvalsh((comp + comp.conj().T) / 2).min())

    def extend(self, ancilla_qubits: int) -> "QuantumChannel":
        """Λ ⊗ id, 辅助比特排在系统比特之后"""
        if ancilla_qubits == 0:
            return self
        eye = np.eye(2 ** ancilla_qubits, dtype=complex)
        return QuantumChannel(
            kraus_operators=[np.kron(k, eye) for k in self.kraus_operators],
            qubit_count=self.qubit_count + ancilla_qubits,
        )

    def then(self, other: "QuantumChannel") -> "QuantumChannel":
        """先作用 self 再作用 other"""
        if other.qubit_count != self.qubit_count:
            raise DimensionMismatchError("复合信道的比特数不一致")
        ops = [b @ a for a in self.kraus_operators for b in other.kraus_operators]
        ops = [op for op in ops if np.linalg.norm(op) > 0]
        return QuantumChannel(kraus_operators=ops, qubit_count=self.qubit_count)

    def tensor(self, other: "QuantumChannel") -> "QuantumChannel":
        ops = [np.kron(a, b) for a in self.kraus_operators for b in other.kraus_operators]
        return QuantumChannel(kraus_operators=ops, qubit_count=self.qubit_count + other.qubit_count)


class ChiMatrix(FrozenArrayModel):
    """Pauli 基下的过程矩阵, 形状 (d², d²)"""

    entries: np.ndarray
    basis_dim: int

    @field_validator("entries", mode="before")
    @classmethod
    def to_array(cls, v):
        return frozen_array(v)

    @model_validator(mode="after")
    def validate_hermitian(self) -> "ChiMatrix":
        d = self.basis_dim
        if d < 2 or d & (d - 1):
            raise ValueError(f"basis_dim {d} 不是 2 的正整数次幂")
        if self.entries.shape != (d * d, d * d):
            raise ValueError(f"χ 形状 {self.entries.shape} 与 basis_dim {d} 不符")
        if np.max(np.abs(self.entries - self.entries.conj().T)) > TOL.chi_hermitian:
            raise ValueError("χ 不是厄米的")
        return self

    @classmethod
    def from_entries(cls, entries) -> "ChiMatrix":
        entries = np.asarray(entries, dtype=complex)
        return cls(entries=entries, basis_dim=int(round(np.sqrt(entries.shape[0]))))

    @property
    def qubit_count(self) -> int:
        return int(round(np.log2(self.basis_dim)))

    def element(self, m: str, n: str) -> complex:
        return complex(self.entries[pauli_index(m), pauli_index(n)])

    def real_parameter_count(self) -> int:
        """厄米约束后的自由实参数个数: 对角 d² 个实数 + 严格上三角的实部与虚部"""
        size = self.entries.shape[0]
        diagonal = size
        off_diagonal = 2 * (size * (size - 1) // 2)
        return diagonal + off_diagonal

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.entries).min())

    def is_physical(self, atol: float = TOL.chi_psd) -> bool:
        """半正定且 Σχ_mn σ_n†σ_m ≼ I"""
        if self.min_eigenvalue() < -atol:
            return False
        slack = np.eye(self.basis_dim) - self.trace_preservation_operator()
        return float(np.linalg.eigvalsh((slack + slack.conj().T) / 2).min()) >= -atol

    def trace_preservation_operator(self) -> np.ndarray:
        """Σ_mn χ_mn σ_n†σ_m, 保迹映射时等于 I"""
        basis = pauli_basis(self.qubit_count)
        return np.einsum("mn,nba,mbc->ac", self.entries, basis.conj(), basis)

    def is_trace_preserving(self, atol: float = TOL.psd) -> bool:
        op = self.trace_preservation_operator()
        return bool(np.max(np.abs(op - np.eye(self.basis_dim))) <= atol)

    def max_distance(self, other: "ChiMatrix") -> float:
        if other.entries.shape != self.entries.shape:
            raise DimensionMismatchError("χ 维度不一致")
        return float(np.max(np.abs(self.entries - other.entries)))

    def labels(self) -> tuple[str, ...]:
        return pauli_labels(self.qubit_count)


def apply_channel(ch: QuantumChannel, rho: DensityMatrix) -> DensityMatrix:
    """Kraus 作用 Σ K ρ K†"""
    if rho.dim != ch.dim:
        raise DimensionMismatchError(
            f"信道维度 {ch.dim} 与态维度 {rho.dim} 不一致",
            detail={"channel_qubits": ch.qubit_count, "state_qubits": rho.qubit_count},
        )
    k = ch.kraus_operators
    out = np.einsum("kab,bc,kdc->ad", k, rho.entries, k.conj())
    return DensityMatrix((out + out.conj().T) / 2)


def pauli_coefficients(ch: QuantumChannel) -> np.ndarray:
    """每个 Kraus 算符在 Pauli 基下的展开系数 c[k, m] = tr(σ_m† K_k) / d"""
    basis = pauli_basis(ch.qubit_count)
    return np.einsum("mab,kab->km", basis.conj(), ch.kraus_operators) / ch.dim


def kraus_to_chi(ch: QuantumChannel) -> ChiMatrix:
    coeffs = pauli_coefficients(ch)
    chi = coeffs.T @ coeffs.conj()
    return ChiMatrix(entries=(chi + chi.conj().T) / 2, basis_dim=ch.dim)


def chi_to_kraus(chi: ChiMatrix) -> QuantumChannel:
    """χ 本征分解得到 Kraus 表示; 低于 1e-12 的本征值舍去"""
    eigvals, eigvecs = np.linalg.eigh(chi.entries)
    if eigvals.min() < -TOL.chi_psd:
        raise UnphysicalChiError(
            f"χ 存在负本征值 {eigvals.min()!r}, 重构结果不对应 CP 映射",
            detail={"min_eigenvalue": float(eigvals.min())},
        )
    keep = eigvals > 1e-12
    if not np.any(keep):
        raise UnphysicalChiError("χ 为零矩阵, 没有 Kraus 算符")
    weights = eigvecs[:, keep] * np.sqrt(eigvals[keep])
    basis = pauli_basis(chi.qubit_count)
    ops = np.einsum("mk,mab->kab", weights, basis)
    try:
        return QuantumChannel(kraus_operators=list(ops), qubit_count=chi.qubit_count)
    except ValidationError as e:
        raise UnphysicalChiError("χ 对应的映射不满足 ΣK†K ≼ I") from e


def chi_to_ptm(chi: ChiMatrix) -> np.ndarray:
    """Pauli 转移矩阵 R_ij = tr(σ_i Λ(σ_j)) / d"""
    basis = pauli_basis(chi.qubit_count)
    images = np.einsum("mn,mab,jbc,ndc->jad", chi.entries, basis, basis, basis.conj())
    return np.einsum("iab,jba->ij", basis, images).real / chi.basis_dim


def parameter_count(d: int, trace_preserving_known: bool = False) -> int:
    """非保迹 CP 映射的独立实参数 d⁴; 已知辅助比特局域态时为 d⁴ - d²"""
    return d ** 4 - (d ** 2 if trace_preserving_known else 0)
