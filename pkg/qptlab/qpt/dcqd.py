"""DCQD 配置: 纠缠稳定子输入 + 稳定子/正规化子对易测量

每一对系统-辅助比特 (i, i+n) 取四类配置之一:
    P        输入 |Φ+>, Bell 测量, 概率即 χ 的对角元
    Z, X, Y  输入 ((u I + v σ_t) ⊗ I)|Φ+>, 测量 {稳定子, 正规化子}
其中 u = (α + e^{iφ}β)/√2, v = (α - e^{iφ}β)/√2. t = Z 时输入为 α|00> + e^{iφ}β|11>.
n 对比特的配置是单对配置的张量积, 共 4^n 个.
"""

import logging
from functools import reduce
from itertools import product

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from qptlab.common.exceptions import DcqdRankError, InvalidArgumentError
from qptlab.core.pauli import PauliString, pauli_matrix
from qptlab.core.states import KetVector, ket_from_operator, product_ket, tensor_kets
from qptlab.measurement.projective import bell_measurement, setting_to_measurement
from qptlab.mub.settings import MeasurementSetting
from qptlab.qpt.design import design_matrix_for_configs
from qptlab.qpt.experiment import Config

logger = logging.getLogger(__name__)

PAIR_KINDS = ("P", "Z", "X", "Y")

# 每类配置在一对比特上测量的 (稳定子, 正规化子)
PAIR_MEASUREMENTS = {
    "P": ("ZZ", "XX"),
    "Z": ("ZZ", "XX"),
    "X": ("XX", "ZZ"),
    "Y": ("YY", "ZZ"),
}

# 辅助比特上 σ_t 的本征态, 用于直积输入对照
_ANCILLA_EIGENSTATES = {
    "Z": ("0", "1"),
    "X": ("+", "-"),
    "Y": ("+i", "-i"),
}


class DcqdParameters(BaseModel):
    """相干配置输入态参数"""

    model_config = ConfigDict(extra="ignore", frozen=True)

    alpha: float = Field(default=float(np.sqrt(0.75)), gt=0, description="α")
    beta: float = Field(default=0.5, gt=0, description="β")
    phi: float = Field(default=float(np.pi / 2), description="相对相位 φ")

    @model_validator(mode="after")
    def validate_amplitudes(self) -> "DcqdParameters":
        if abs(self.alpha ** 2 + self.beta ** 2 - 1.0) > 1e-12:
            raise ValueError("要求 α² + β² = 1")
        if abs(self.alpha - self.beta) < 1e-9:
            raise ValueError("要求 |α| ≠ |β|")
        return self

    def coefficients(self) -> tuple[complex, complex]:
        phase = np.exp(1j * self.phi)
        u = (self.alpha + phase * self.beta) / np.sqrt(2)
        v = (self.alpha - phase * self.beta) / np.sqrt(2)
        return complex(u), complex(v)


def pair_operator(kind: str, params: DcqdParameters) -> np.ndarray:
    """单对比特上作用于系统的输入算符 M, 输入态为 (M ⊗ I)|Φ+>"""
    if kind == "P":
        return np.eye(2, dtype=complex)
    u, v = params.coefficients()
    return u * np.eye(2) + v * pauli_matrix(kind)


def _measurement_for(kinds: tuple[str, ...]):
    n = len(kinds)
    if all(k == "P" for k in kinds):
        return bell_measurement(n, include_loss=True)
    gens = []
    for i, kind in enumerate(kinds):
        for label in PAIR_MEASUREMENTS[kind]:
            gens.append(PauliString(label).embed([i, i + n], 2 * n))
    return setting_to_measurement(MeasurementSetting(generators=gens, qubit_count=2 * n), include_loss=True)


def dcqd_configs(n: int = 1, params: DcqdParameters | None = None, check_rank: bool = True) -> list[Config]:
    """4^n 个 DCQD 配置; 设计矩阵达不到满秩时抛出 DcqdRankError"""
    if n < 1:
        raise InvalidArgumentError(f"系统比特数必须为正, 实际 {n}")
    params = params or DcqdParameters()
    configs = []
    for kinds in product(PAIR_KINDS, repeat=n):
        op = reduce(np.kron, (pair_operator(k, params) for k in kinds))
        configs.append(Config(
            label=f"dcqd:{''.join(kinds)}",
            input_state=ket_from_operator(op),
            measurement=_measurement_for(kinds),
            system_qubits=n,
            ancilla_qubits=n,
        ))
    if check_rank:
        design = design_matrix_for_configs(configs, n)
        rank = design.rank()
        if rank != design.parameter_count:
            raise DcqdRankError(
                f"DCQD 参数 {params.model_dump()} 下设计矩阵秩为 {rank}, 需要 {design.parameter_count}",
                detail={"rank": rank, "required": design.parameter_count},
            )
        logger.debug(f"DCQD n={n} rank gate passed, condition number {design.condition_number():.3e}")
    return configs


def config_kinds(config: Config) -> str:
    return config.label.split(":", 1)[1]


def product_state_variant(configs: list[Config], rng: np.random.Generator) -> list[Config]:
    """相干配置的输入替换为直积态: 随机系统态 ⊗ 辅助比特上 σ_t 的本征态"""
    out = []
    for c in configs:
        kinds = config_kinds(c)
        if c.system_qubits != 1:
            raise InvalidArgumentError("直积态对照只支持 n = 1")
        if kinds == "P":
            out.append(c)
            continue
        amps = rng.normal(size=2) + 1j * rng.normal(size=2)
        system = KetVector(amps / np.linalg.norm(amps))
        ancilla = product_ket([_ANCILLA_EIGENSTATES[kinds][int(rng.integers(2))]])
        out.append(c.model_copy(update={
            "label": f"{c.label}-product",
            "input_state": tensor_kets(system, ancilla),
        }))
    return out
