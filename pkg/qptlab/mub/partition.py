"""Pauli 群的最大对易划分

m 比特的 4^m - 1 个非平凡 Pauli 串划分为 2^m + 1 个两两不交的对易类, 每类 2^m - 1 个.
m = 2 使用固定表; m = 1, 3, 4 使用有限域 GF(2^m) 的迹形式构造:
    L_b = {(x, S_b x)}, S_b[i][j] = Tr(b·α^i·α^j), 另加纯 Z 类 L_∞.
不同 b 的 S_b 之差可逆, 故各类两两不交.
"""

import logging

from qptlab.common.exceptions import PartitionSearchError
from qptlab.core.pauli import PauliString
from qptlab.mub.settings import MeasurementSetting

logger = logging.getLogger(__name__)

# 两比特划分: 前三类各含一个系统局域算符与一个辅助比特局域算符
TWO_QUBIT_CLASSES = (
    ("XI", "IX", "XX"),
    ("YI", "IY", "YY"),
    ("ZI", "IZ", "ZZ"),
    ("XY", "YZ", "ZX"),
    ("YX", "ZY", "XZ"),
)

# GF(2^m) 的不可约多项式
_IRREDUCIBLE = {1: 0b11, 3: 0b1011, 4: 0b10011}


def gf_mul(a: int, b: int, m: int) -> int:
    poly = _IRREDUCIBLE[m]
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= poly
    return out


def gf_trace(a: int, m: int) -> int:
    """绝对迹 Tr(a) = a + a^2 + ... + a^(2^(m-1)), 取值 0 或 1"""
    acc, power = 0, a
    for _ in range(m):
        acc ^= power
        power = gf_mul(power, power, m)
    return acc & 1


def _trace_form_setting(b: int, m: int) -> MeasurementSetting:
    gens = []
    for j in range(m):
        # S_b e_j 的第 i 个分量 = Tr(b·α^i·α^j)
        z = 0
        for i in range(m):
            z |= gf_trace(gf_mul(b, gf_mul(1 << i, 1 << j, m), m), m) << i
        gens.append(PauliString.from_symplectic(1 << j, z, m))
    return MeasurementSetting(generators=gens, qubit_count=m)


def _field_partition(m: int) -> list[MeasurementSetting]:
    settings = [_trace_form_setting(b, m) for b in range(2 ** m)]
    z_type = [PauliString.from_symplectic(0, 1 << j, m) for j in range(m)]
    settings.append(MeasurementSetting(generators=z_type, qubit_count=m))
    return settings


def pauli_partition(m: int) -> list[MeasurementSetting]:
    """m 比特 Pauli 群的 2^m + 1 个对易类 (以测量设置给出), m ∈ {1, 2, 3, 4}"""
    if m == 2:
        return [MeasurementSetting(generators=triple[:2], qubit_count=2) for triple in TWO_QUBIT_CLASSES]
    if m not in _IRREDUCIBLE:
        raise PartitionSearchError(
            f"不支持 m={m} 的 Pauli 群划分, 仅支持 m ∈ {{1, 2, 3, 4}}", detail={"m": m})
    settings = _field_partition(m)
    check_partition(settings, m)
    logger.debug(f"built {len(settings)} commuting classes for m={m}")
    return settings


def check_partition(settings: list[MeasurementSetting], m: int) -> None:
    """不交且恰好覆盖全部非平凡 Pauli 串, 否则抛出 PartitionSearchError"""
    seen: set[str] = set()
    for s in settings:
        for p in s.elements():
            if p.labels in seen:
                raise PartitionSearchError(f"Pauli 串 {p} 出现在多个类中")
            seen.add(p.labels)
    if len(settings) != 2 ** m + 1 or len(seen) != 4 ** m - 1:
        raise PartitionSearchError(
            f"划分不完整: {len(settings)} 个类覆盖 {len(seen)} 个 Pauli 串",
            detail={"m": m, "classes": len(settings), "covered": len(seen)},
        )


def partition_dump(settings: list[MeasurementSetting]) -> str:
    """每行一个对易类, 逗号分隔"""
    return "".join(",".join(p.labels for p in s.elements()) + "\n" for s in settings)
