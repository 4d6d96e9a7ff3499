"""测量线路的门数估计

- 单个 m 比特 Pauli 串: m 个顺序 CNOT + 每个 X/Y 标签一次基变换
- g 个对易算符的设置: 非局域两体门 g·m, 仅最近邻时再乘搬运因子 m
- 方案标签按 total_qubits = 2n 计: SQPT/AAPT_SEP/DCQD 为 2n, AAPT_MUB 为 (2n)² 或 (2n)³,
  AAPT_POVM 为 4^(2n)
"""

from qptlab.common.enums import Locality, SchemeTag
from qptlab.common.exceptions import DimensionMismatchError, InvalidArgumentError
from qptlab.core.pauli import PauliString
from qptlab.mub.settings import MeasurementSetting


def pauli_string_cost(p: PauliString) -> int:
    basis_changes = sum(1 for c in p.labels if c in "XY")
    return p.qubit_count + basis_changes


def setting_cost(s: MeasurementSetting, locality: Locality) -> int:
    m = s.qubit_count
    gates = s.generator_count * m
    if locality == Locality.LOCAL_TWO_BODY:
        gates *= m
    return gates


def scheme_cost(scheme: SchemeTag, n: int, locality: Locality) -> int:
    """单个配置的门数"""
    if scheme == SchemeTag.AAPT_MUB:
        per_setting = (2 * n) ** 2
        return per_setting * (2 * n) if locality == Locality.LOCAL_TWO_BODY else per_setting
    if scheme == SchemeTag.AAPT_POVM:
        return 4 ** (2 * n)
    return 2 * n


def measurement_cost(
    target: PauliString | MeasurementSetting | SchemeTag,
    total_qubits: int,
    locality: Locality = Locality.NONLOCAL_TWO_BODY,
) -> int:
    if total_qubits < 1:
        raise InvalidArgumentError(f"比特数必须为正, 实际 {total_qubits}")
    if isinstance(target, SchemeTag):
        if total_qubits % 2:
            raise InvalidArgumentError("方案门数按系统+辅助比特计, total_qubits 必须为偶数")
        return scheme_cost(target, total_qubits // 2, locality)
    if target.qubit_count != total_qubits:
        raise DimensionMismatchError(f"测量作用于 {target.qubit_count} 个比特, 而非 {total_qubits} 个")
    if isinstance(target, PauliString):
        return pauli_string_cost(target)
    return setting_cost(target, locality)
