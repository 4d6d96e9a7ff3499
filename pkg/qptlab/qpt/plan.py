"""五种过程层析方案的实验方案构造"""

import logging
from itertools import product

from qptlab.common.enums import SchemeTag
from qptlab.common.exceptions import InvalidArgumentError, SizeLimitError
from qptlab.core.pauli import PauliString
from qptlab.core.states import maximally_entangled, product_ket
from qptlab.measurement.povm import tetrahedral_povm
from qptlab.measurement.projective import MAX_TOTAL_QUBITS, setting_to_measurement
from qptlab.mub.partition import pauli_partition
from qptlab.mub.settings import MeasurementSetting
from qptlab.qpt.dcqd import dcqd_configs
from qptlab.qpt.experiment import Config, ExperimentPlan, analytic_ancillas

logger = logging.getLogger(__name__)

# SQPT 单比特输入态
SQPT_INPUT_TOKENS = ("0", "1", "+", "+i")


def local_setting(labels: str) -> MeasurementSetting:
    """逐比特单比特 Pauli 测量; 标签 I 用 Z 设备实现"""
    m = len(labels)
    gens = [PauliString("Z" if c == "I" else c).embed([j], m) for j, c in enumerate(labels)]
    return MeasurementSetting(generators=gens, qubit_count=m)


def sqpt_configs(n: int) -> list[Config]:
    measurements = {
        "".join(labels): setting_to_measurement(local_setting("".join(labels)), include_loss=True)
        for labels in product("IXYZ", repeat=n)
    }
    configs = []
    for tokens in product(SQPT_INPUT_TOKENS, repeat=n):
        state = product_ket(tokens)
        for labels, meas in measurements.items():
            configs.append(Config(
                label=f"in={'.'.join(tokens)} meas={labels}",
                input_state=state,
                measurement=meas,
                system_qubits=n,
            ))
    return configs


def aapt_separable_configs(n: int) -> list[Config]:
    state = maximally_entangled(n)
    return [
        Config(
            label=f"meas={''.join(labels)}",
            input_state=state,
            measurement=setting_to_measurement(local_setting("".join(labels)), include_loss=True),
            system_qubits=n,
            ancilla_qubits=n,
        )
        for labels in product("XYZ", repeat=2 * n)
    ]


def aapt_mub_configs(n: int) -> list[Config]:
    state = maximally_entangled(n)
    return [
        Config(
            label=f"mub{i}:{'+'.join(g.labels for g in setting.generators)}",
            input_state=state,
            measurement=setting_to_measurement(setting, include_loss=True),
            system_qubits=n,
            ancilla_qubits=n,
        )
        for i, setting in enumerate(pauli_partition(2 * n))
    ]


def aapt_povm_configs(n: int) -> list[Config]:
    if n != 1:
        raise SizeLimitError(f"AAPT_POVM 只支持 n = 1 的精确模拟, 实际 n = {n}", detail={"n": n})
    return [Config(
        label="povm",
        input_state=maximally_entangled(1),
        measurement=tetrahedral_povm(2, include_loss=True),
        system_qubits=1,
        ancilla_qubits=1,
    )]


_BUILDERS = {
    SchemeTag.SQPT: sqpt_configs,
    SchemeTag.AAPT_SEPARABLE: aapt_separable_configs,
    SchemeTag.AAPT_MUB: aapt_mub_configs,
    SchemeTag.AAPT_POVM: aapt_povm_configs,
    SchemeTag.DCQD: dcqd_configs,
}


def build_plan(scheme: SchemeTag | str, n: int, max_total_qubits: int = MAX_TOTAL_QUBITS) -> ExperimentPlan:
    """构造可精确模拟的实验方案 (系统+辅助比特总数不超过 max_total_qubits)"""
    scheme = SchemeTag.parse(scheme)
    if n < 1:
        raise InvalidArgumentError(f"系统比特数必须为正, 实际 {n}")
    limit = min(max_total_qubits, MAX_TOTAL_QUBITS)
    if 2 * n > limit:
        raise SizeLimitError(
            f"n = {n} 需要 {2 * n} 个比特, 超过精确模拟上限 {limit}",
            detail={"scheme": scheme.value, "n": n, "limit": limit},
        )
    configs = _BUILDERS[scheme](n)
    plan = ExperimentPlan(
        scheme=scheme,
        n=n,
        configs=tuple(configs),
        ancilla_count=analytic_ancillas(scheme, n),
        simulated_ancillas=0 if scheme == SchemeTag.SQPT else n,
    )
    logger.info(f"built {scheme.value} plan n={n}: {len(plan.configs)} configs")
    return plan
