"""实验配置与实验方案"""

import numpy as np
from pydantic import model_validator

from qptlab.common.enums import SchemeTag
from qptlab.common.model import FrozenArrayModel
from qptlab.core.states import DensityMatrix, KetVector, schmidt_rank
from qptlab.measurement.povm import PovmMeasurement
from qptlab.measurement.projective import ProjectiveMeasurement


class Config(FrozenArrayModel):
    """(输入态, 测量) 组成的一个实验配置; 输入态系统比特在前, 辅助比特在后"""

    label: str
    input_state: KetVector | DensityMatrix
    measurement: ProjectiveMeasurement | PovmMeasurement
    system_qubits: int
    ancilla_qubits: int = 0

    @model_validator(mode="after")
    def validate_dims(self) -> "Config":
        if "," in self.label:
            raise ValueError("配置标签不能包含逗号")
        total = self.system_qubits + self.ancilla_qubits
        if self.input_state.qubit_count != total:
            raise ValueError(f"输入态比特数 {self.input_state.qubit_count} 与 {total} 不符")
        if self.measurement.dim != 2 ** total:
            raise ValueError(f"测量维度 {self.measurement.dim} 与 2^{total} 不符")
        return self

    def density(self) -> np.ndarray:
        if isinstance(self.input_state, KetVector):
            return self.input_state.projector()
        return self.input_state.entries

    def is_entangled(self) -> bool:
        """系统/辅助切分下 Schmidt 秩 >= 2 (仅对纯态判断)"""
        if self.ancilla_qubits == 0 or not isinstance(self.input_state, KetVector):
            return False
        return schmidt_rank(self.input_state, self.system_qubits) >= 2

    @property
    def outcome_count(self) -> int:
        return self.measurement.outcome_count


def planned_config_count(scheme: SchemeTag, n: int) -> int:
    """模拟时的配置数 (AAPT_SEP 为 3^(2n) 个不同的 Pauli 设备)"""
    return {
        SchemeTag.SQPT: 16 ** n,
        SchemeTag.AAPT_SEPARABLE: 3 ** (2 * n),
        SchemeTag.AAPT_MUB: 4 ** n + 1,
        SchemeTag.AAPT_POVM: 1,
        SchemeTag.DCQD: 4 ** n,
    }[scheme]


def reported_config_count(scheme: SchemeTag, n: int) -> int:
    """资源表中的配置数 (AAPT_SEP 按 16^n 计)"""
    if scheme == SchemeTag.AAPT_SEPARABLE:
        return 16 ** n
    return planned_config_count(scheme, n)


def analytic_ancillas(scheme: SchemeTag, n: int) -> int:
    return {SchemeTag.SQPT: 0, SchemeTag.AAPT_POVM: 3 * n}.get(scheme, n)


class ExperimentPlan(FrozenArrayModel):
    scheme: SchemeTag
    n: int
    configs: tuple[Config, ...]
    ancilla_count: int
    simulated_ancillas: int

    @model_validator(mode="after")
    def validate_plan(self) -> "ExperimentPlan":
        expected = planned_config_count(self.scheme, self.n)
        if len(self.configs) != expected:
            raise ValueError(f"{self.scheme.value} n={self.n} 应有 {expected} 个配置, 实际 {len(self.configs)}")
        if self.ancilla_count != analytic_ancillas(self.scheme, self.n):
            raise ValueError(f"{self.scheme.value} 的辅助比特数应为 {analytic_ancillas(self.scheme, self.n)}")
        for c in self.configs:
            if c.system_qubits != self.n or c.ancilla_qubits != self.simulated_ancillas:
                raise ValueError(f"配置 {c.label} 的比特布局与方案不符")
        if self.scheme == SchemeTag.DCQD:
            for c in self.configs:
                if not c.is_entangled():
                    raise ValueError(f"DCQD 配置 {c.label} 的输入态没有纠缠")
        return self

    @property
    def reported_configurations(self) -> int:
        return reported_config_count(self.scheme, self.n)

    @property
    def outcome_counts(self) -> tuple[int, ...]:
        return tuple(c.outcome_count for c in self.configs)

    @property
    def total_qubits(self) -> int:
        return self.n + self.simulated_ancillas
