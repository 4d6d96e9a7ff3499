"""共同本征基与互无偏基族"""

import logging
from itertools import product

import numpy as np
from pydantic import field_validator, model_validator

from qptlab.common.exceptions import InvalidArgumentError
from qptlab.common.model import FrozenArrayModel, frozen_array
from qptlab.config import TOLERANCES as TOL
from qptlab.core.pauli import pauli_matrix
from qptlab.core.states import KetVector
from qptlab.mub.partition import pauli_partition
from qptlab.mub.settings import MeasurementSetting

logger = logging.getLogger(__name__)

UNBIASED_TOL = 1e-10


def sign_label(signs: tuple[int, ...]) -> str:
    return "".join("+" if s > 0 else "-" for s in signs)


def fix_phase(vec: np.ndarray, atol: float = 1e-10) -> np.ndarray:
    """第一个非零振幅取为正实数"""
    nonzero = np.flatnonzero(np.abs(vec) > atol)
    if nonzero.size == 0:
        return vec
    first = vec[nonzero[0]]
    return vec * (abs(first) / first)


class EigenSector(FrozenArrayModel):
    """一组本征值符号对应的共同本征空间"""

    signs: tuple[int, ...]
    projector: np.ndarray
    vectors: tuple[KetVector, ...]

    @property
    def label(self) -> str:
        return sign_label(self.signs)

    @property
    def rank(self) -> int:
        return len(self.vectors)


class CommonEigenbasis(FrozenArrayModel):
    setting: MeasurementSetting
    sectors: tuple[EigenSector, ...]

    @property
    def vectors(self) -> tuple[KetVector, ...]:
        return tuple(v for s in self.sectors for v in s.vectors)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.sectors for _ in s.vectors)

    def matrix(self) -> np.ndarray:
        """以基矢为列的幺正矩阵"""
        return np.column_stack([v.amplitudes for v in self.vectors])


def sector_projector(setting: MeasurementSetting, signs: tuple[int, ...]) -> np.ndarray:
    """Π_j (I + s_j G_j) / 2"""
    d = 2 ** setting.qubit_count
    proj = np.eye(d, dtype=complex)
    for s, g in zip(signs, setting.generators):
        proj = proj @ (np.eye(d) + s * pauli_matrix(g)) / 2
    return proj


def _sector_vectors(proj: np.ndarray, rank: int) -> list[np.ndarray]:
    if rank == 1:
        col = int(np.argmax(np.linalg.norm(proj, axis=0)))
        vec = proj[:, col] / np.linalg.norm(proj[:, col])
        return [fix_phase(vec)]
    _, vecs = np.linalg.eigh((proj + proj.conj().T) / 2)
    return [fix_phase(vecs[:, k]) for k in range(vecs.shape[1] - rank, vecs.shape[1])]


def common_eigenbasis(setting: MeasurementSetting) -> CommonEigenbasis:
    """按符号向量 (+ 先于 -) 排列的共同本征基; 非满设置给出秩 2^(m-g) 的扇区"""
    rank = 2 ** (setting.qubit_count - setting.generator_count)
    sectors = []
    for signs in product((1, -1), repeat=setting.generator_count):
        proj = sector_projector(setting, signs)
        vectors = tuple(KetVector(v) for v in _sector_vectors(proj, rank))
        sectors.append(EigenSector(signs=signs, projector=frozen_array(proj), vectors=vectors))
    return CommonEigenbasis(setting=setting, sectors=tuple(sectors))


def max_unbiasedness_deviation(bases: tuple[np.ndarray, ...]) -> float:
    """跨基 |<a|b>|² 与 1/d 的最大偏差"""
    if len(bases) < 2:
        return 0.0
    d = bases[0].shape[0]
    worst = 0.0
    for i, a in enumerate(bases):
        for b in bases[i + 1:]:
            overlaps = np.abs(a.conj().T @ b) ** 2
            worst = max(worst, float(np.max(np.abs(overlaps - 1.0 / d))))
    return worst


class MubFamily(FrozenArrayModel):
    """互无偏基族, 每个基矩阵以基矢为列"""

    bases: tuple[np.ndarray, ...]
    settings: tuple[MeasurementSetting, ...]

    @field_validator("bases", mode="before")
    @classmethod
    def to_arrays(cls, v):
        return tuple(frozen_array(b) for b in v)

    @model_validator(mode="after")
    def validate_family(self) -> "MubFamily":
        if len(self.bases) != len(self.settings):
            raise ValueError("基的个数与测量设置个数不一致")
        d = self.bases[0].shape[0]
        if len(self.bases) > d + 1:
            raise ValueError(f"{d} 维空间至多存在 {d + 1} 个互无偏基")
        for basis in self.bases:
            if np.max(np.abs(basis.conj().T @ basis - np.eye(d))) > TOL.hermitian:
                raise ValueError("基不是正交归一的")
        deviation = max_unbiasedness_deviation(self.bases)
        if deviation > UNBIASED_TOL:
            raise ValueError(f"基之间不互无偏, 最大偏差 {deviation!r}")
        return self

    @property
    def qubit_count(self) -> int:
        return self.settings[0].qubit_count

    def __len__(self) -> int:
        return len(self.bases)

    def max_unbiasedness_deviation(self) -> float:
        return max_unbiasedness_deviation(self.bases)


def mub_family(settings: list[MeasurementSetting]) -> MubFamily:
    """由满测量设置构造并认证互无偏基族"""
    for s in settings:
        if not s.is_full():
            raise InvalidArgumentError(f"测量设置 {s} 不是满设置, 无法给出正交基")
    bases = tuple(common_eigenbasis(s).matrix() for s in settings)
    family = MubFamily(bases=bases, settings=tuple(settings))
    logger.debug(f"certified MUB family of {len(family)} bases, deviation {family.max_unbiasedness_deviation():.3e}")
    return family


def two_qubit_mub() -> MubFamily:
    """两比特 (d = 4) 的五个互无偏基"""
    return mub_family(pauli_partition(2))
