"""资源核算: 配置数、结果指数、辅助比特、门数与目标精度下的重复次数

重复次数 N' = 2^(kn) / ε², 用有理数精确计算后向上取整.
"""

import math
from collections.abc import Iterable
from fractions import Fraction

from pydantic import Field, computed_field, model_validator

from qptlab.common.enums import Locality, SchemeTag
from qptlab.common.exceptions import InvalidArgumentError
from qptlab.common.model import BaseDataModel
from qptlab.measurement.cost import scheme_cost

PRODUCT_MUB_VARIANT = "product-mub"

# 每个方案的结果指数 k: outcomes = 2^(kn)
OUTCOME_EXPONENT = {
    SchemeTag.SQPT: 1,
    SchemeTag.AAPT_SEPARABLE: 2,
    SchemeTag.AAPT_MUB: 2,
    SchemeTag.AAPT_POVM: 4,
    SchemeTag.DCQD: 2,
}


class GateModel(BaseDataModel):
    locality: Locality = Field(default=Locality.NONLOCAL_TWO_BODY, description="两体相互作用的可达性")


def exact_epsilon(epsilon: float | str | Fraction) -> Fraction:
    """按十进制写法取精确有理数, 0.1 即 1/10"""
    value = epsilon if isinstance(epsilon, Fraction) else Fraction(str(epsilon))
    if value <= 0:
        raise InvalidArgumentError(f"精度 ε 必须为正, 实际 {epsilon}")
    return value


def repetitions_for_precision(k: int, n: int, epsilon: float | str | Fraction) -> int:
    if n < 1 or k < 1:
        raise InvalidArgumentError(f"k 与 n 必须为正, 实际 k={k}, n={n}")
    return math.ceil(Fraction(2 ** (k * n)) / exact_epsilon(epsilon) ** 2)


class ResourceRow(BaseDataModel):
    scheme: SchemeTag
    variant: str | None = Field(default=None, description="方案变体, 例如 product-mub")
    n: int = Field(..., ge=1)
    inputs: int = Field(..., ge=0)
    settings: int = Field(..., ge=0, description="每个输入的测量设置数")
    configurations: int = Field(..., ge=0)
    k: int = Field(..., description="结果指数, outcomes = 2^(kn)")
    outcomes: int = Field(..., ge=0)
    ancillas: int = Field(..., ge=0)
    gates_per_config: int = Field(..., ge=0)
    total_ops: int = Field(..., ge=0)
    repetitions: int = Field(..., ge=0, description="每个配置的重复次数")
    grand_total: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_counts(self) -> "ResourceRow":
        if self.k not in (1, 2, 4):
            raise ValueError(f"结果指数 k 必须属于 {{1, 2, 4}}, 实际 {self.k}")
        if self.configurations != self.inputs * self.settings:
            raise ValueError("configurations 必须等于 inputs × settings")
        if self.outcomes != 2 ** (self.k * self.n):
            raise ValueError("outcomes 必须等于 2^(kn)")
        if self.total_ops != self.configurations * self.gates_per_config:
            raise ValueError("total_ops 必须等于 configurations × gates_per_config")
        if self.grand_total != self.total_ops * self.repetitions:
            raise ValueError("grand_total 必须等于 total_ops × repetitions")
        return self

    @computed_field
    @property
    def distinct_devices(self) -> int:
        """物理上不同的测量设备数 (I 标签由 Z 设备实现)"""
        if self.variant is None and self.scheme == SchemeTag.SQPT:
            return 3 ** self.n
        if self.variant is None and self.scheme == SchemeTag.AAPT_SEPARABLE:
            return 3 ** (2 * self.n)
        return self.settings

    @computed_field
    @property
    def exponential_gates(self) -> bool:
        return self.scheme == SchemeTag.AAPT_POVM

    @property
    def scheme_column(self) -> str:
        return self.scheme.value if self.variant is None else f"{self.scheme.value}/{self.variant}"


def _row(scheme, n, inputs, settings, k, ancillas, gates, epsilon, variant=None) -> ResourceRow:
    configurations = inputs * settings
    repetitions = repetitions_for_precision(k, n, epsilon)
    return ResourceRow(
        scheme=scheme,
        variant=variant,
        n=n,
        inputs=inputs,
        settings=settings,
        configurations=configurations,
        k=k,
        outcomes=2 ** (k * n),
        ancillas=ancillas,
        gates_per_config=gates,
        total_ops=configurations * gates,
        repetitions=repetitions,
        grand_total=configurations * gates * repetitions,
    )


def resource_row(
    scheme: SchemeTag | str,
    n: int,
    model: GateModel | None = None,
    epsilon: float | str | Fraction = "0.1",
) -> ResourceRow:
    scheme = SchemeTag.parse(scheme)
    if n < 1:
        raise InvalidArgumentError(f"系统比特数必须为正, 实际 {n}")
    model = model or GateModel()
    inputs, settings, ancillas = {
        SchemeTag.SQPT: (4 ** n, 4 ** n, 0),
        SchemeTag.AAPT_SEPARABLE: (1, 16 ** n, n),
        SchemeTag.AAPT_MUB: (1, 4 ** n + 1, n),
        SchemeTag.AAPT_POVM: (1, 1, 3 * n),
        SchemeTag.DCQD: (4 ** n, 1, n),
    }[scheme]
    gates = scheme_cost(scheme, n, model.locality)
    return _row(scheme, n, inputs, settings, OUTCOME_EXPONENT[scheme], ancillas, gates, epsilon)


def product_mub_row(n: int, model: GateModel | None = None, epsilon: float | str | Fraction = "0.1") -> ResourceRow:
    """AAPT 变体: 每对比特独立做两比特 MUB 测量, 5^n 个配置, 每配置 4n 个非局域门"""
    model = model or GateModel()
    gates = 4 * n
    if model.locality == Locality.LOCAL_TWO_BODY:
        gates *= 2 * n
    return _row(SchemeTag.AAPT_MUB, n, 1, 5 ** n, 2, n, gates, epsilon, variant=PRODUCT_MUB_VARIANT)


def comparison_table(
    n_range: Iterable[int],
    model: GateModel | None = None,
    epsilon: float | str | Fraction = "0.1",
    include_variants: bool = False,
) -> list[ResourceRow]:
    """按 n 升序、方案枚举顺序排列"""
    rows = []
    for n in n_range:
        for scheme in SchemeTag:
            rows.append(resource_row(scheme, n, model, epsilon))
            if include_variants and scheme == SchemeTag.AAPT_MUB:
                rows.append(product_mub_row(n, model, epsilon))
    return rows


class ResourceTable(BaseDataModel):
    """结构化文本格式的资源对比表"""

    epsilon: str
    locality: Locality
    rows: list[ResourceRow]
