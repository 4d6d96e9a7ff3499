"""Pauli 串与多比特 Pauli 算符基

基矩阵按字典序 I < X < Y < Z 排列, 最左侧比特为最高位; 基不归一化 (σ_I = I).
"""

from collections.abc import Sequence
from functools import lru_cache, reduce
from itertools import product

import numpy as np
from pydantic import field_validator

from qptlab.common.exceptions import DimensionMismatchError
from qptlab.common.model import FrozenArrayModel

PAULI_LETTERS = "IXYZ"

_SINGLE_QUBIT = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# 单比特字母 <-> 辛表示 (x, z)
_LETTER_TO_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_XZ_TO_LETTER = {v: k for k, v in _LETTER_TO_XZ.items()}


class PauliString(FrozenArrayModel):
    """单比特 Pauli 标签的张量积, 例如 "XZ" = X ⊗ Z"""

    labels: str

    def __init__(self, labels: str | Sequence[str], **data):
        super().__init__(labels=labels, **data)

    @field_validator("labels", mode="before")
    @classmethod
    def validate_labels(cls, v):
        if isinstance(v, (list, tuple)):
            v = "".join(str(x) for x in v)
        v = str(v).strip().upper()
        if not v:
            raise ValueError("Pauli 串长度至少为 1")
        unknown = set(v) - set(PAULI_LETTERS)
        if unknown:
            raise ValueError(f"非法 Pauli 标签: {sorted(unknown)}")
        return v

    @property
    def qubit_count(self) -> int:
        return len(self.labels)

    @property
    def weight(self) -> int:
        return sum(1 for c in self.labels if c != "I")

    def is_identity(self) -> bool:
        return self.weight == 0

    @property
    def index(self) -> int:
        """在字典序 Pauli 基中的下标"""
        idx = 0
        for c in self.labels:
            idx = idx * 4 + PAULI_LETTERS.index(c)
        return idx

    def symplectic(self) -> tuple[int, int]:
        """辛表示 (x, z) 位掩码, 第 j 个比特对应 bit j"""
        x = z = 0
        for j, c in enumerate(self.labels):
            bx, bz = _LETTER_TO_XZ[c]
            x |= bx << j
            z |= bz << j
        return x, z

    @classmethod
    def from_symplectic(cls, x: int, z: int, qubit_count: int) -> "PauliString":
        letters = [_XZ_TO_LETTER[((x >> j) & 1, (z >> j) & 1)] for j in range(qubit_count)]
        return cls("".join(letters))

    @classmethod
    def from_index(cls, index: int, qubit_count: int) -> "PauliString":
        letters = []
        for _ in range(qubit_count):
            letters.append(PAULI_LETTERS[index % 4])
            index //= 4
        return cls("".join(reversed(letters)))

    def embed(self, positions: Sequence[int], qubit_count: int) -> "PauliString":
        """把本串放到更大寄存器的指定比特上, 其余比特为 I"""
        if len(positions) != self.qubit_count:
            raise DimensionMismatchError("嵌入位置个数与 Pauli 串长度不一致")
        letters = ["I"] * qubit_count
        for pos, c in zip(positions, self.labels):
            letters[pos] = c
        return PauliString("".join(letters))

    def __str__(self) -> str:
        return self.labels


def _as_pauli(p: "PauliString | str") -> PauliString:
    return p if isinstance(p, PauliString) else PauliString(p)


@lru_cache(maxsize=1024)
def _pauli_matrix_cached(labels: str) -> np.ndarray:
    mat = reduce(np.kron, (_SINGLE_QUBIT[c] for c in labels))
    mat = np.array(mat, dtype=complex)
    mat.setflags(write=False)
    return mat


def pauli_matrix(p: PauliString | str) -> np.ndarray:
    """Pauli 串对应的 2^m × 2^m 张量积矩阵"""
    return _pauli_matrix_cached(_as_pauli(p).labels)


def commutes(a: PauliString | str, b: PauliString | str) -> bool:
    """两个 Pauli 串对易 当且仅当 双方均非 I 且不同的位置数为偶数"""
    a, b = _as_pauli(a), _as_pauli(b)
    if a.qubit_count != b.qubit_count:
        raise DimensionMismatchError(
            f"Pauli 串长度不一致: {a.qubit_count} != {b.qubit_count}",
            detail={"a": a.labels, "b": b.labels},
        )
    clashes = sum(1 for x, y in zip(a.labels, b.labels) if x != "I" and y != "I" and x != y)
    return clashes % 2 == 0


def multiply_ignoring_phase(a: PauliString | str, b: PauliString | str) -> PauliString:
    """Pauli 串乘积 (忽略 ±1, ±i 相位)"""
    a, b = _as_pauli(a), _as_pauli(b)
    if a.qubit_count != b.qubit_count:
        raise DimensionMismatchError("Pauli 串长度不一致")
    ax, az = a.symplectic()
    bx, bz = b.symplectic()
    return PauliString.from_symplectic(ax ^ bx, az ^ bz, a.qubit_count)


@lru_cache(maxsize=8)
def pauli_labels(qubit_count: int) -> tuple[str, ...]:
    """字典序全部 4^m 个 Pauli 标签"""
    return tuple("".join(t) for t in product(PAULI_LETTERS, repeat=qubit_count))


@lru_cache(maxsize=8)
def pauli_basis(qubit_count: int) -> np.ndarray:
    """形状 (4^m, 2^m, 2^m) 的 Pauli 基矩阵栈"""
    basis = np.array([pauli_matrix(label) for label in pauli_labels(qubit_count)])
    basis.setflags(write=False)
    return basis


def pauli_index(label: PauliString | str) -> int:
    return _as_pauli(label).index
