"""测量设置: 一组两两对易、相互独立的 Pauli 串 (同时测量)"""

from collections.abc import Iterable, Sequence
from functools import reduce

from pydantic import field_validator, model_validator

from qptlab.common.model import FrozenArrayModel
from qptlab.core.pauli import PauliString, commutes, multiply_ignoring_phase


def symplectic_vector(p: PauliString) -> int:
    """辛向量 (x|z) 打包为整数: 低 m 位为 x, 高 m 位为 z"""
    x, z = p.symplectic()
    return x | (z << p.qubit_count)


def gf2_rank(vectors: Iterable[int]) -> int:
    """GF(2) 上整数位向量组的秩 (异或消元)"""
    pivots: dict[int, int] = {}
    rank = 0
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                rank += 1
                break
            v ^= pivots[top]
    return rank


class MeasurementSetting(FrozenArrayModel):
    """一次实验配置中同时测量的对易算符集合"""

    generators: tuple[PauliString, ...]
    qubit_count: int

    @field_validator("generators", mode="before")
    @classmethod
    def to_pauli(cls, v):
        return tuple(g if isinstance(g, PauliString) else PauliString(g) for g in v)

    @model_validator(mode="after")
    def validate_generators(self) -> "MeasurementSetting":
        gens = self.generators
        if not gens:
            raise ValueError("测量设置至少需要一个生成元")
        for g in gens:
            if g.qubit_count != self.qubit_count:
                raise ValueError(f"生成元 {g} 的长度与比特数 {self.qubit_count} 不符")
            if g.is_identity():
                raise ValueError("生成元不能是全 I")
        for i, a in enumerate(gens):
            for b in gens[i + 1:]:
                if not commutes(a, b):
                    raise ValueError(f"生成元 {a} 与 {b} 不对易")
        if gf2_rank(symplectic_vector(g) for g in gens) != len(gens):
            raise ValueError("生成元不独立: 存在可由其余生成元相乘得到的生成元")
        return self

    @classmethod
    def of(cls, labels: Sequence[str | PauliString]) -> "MeasurementSetting":
        gens = tuple(g if isinstance(g, PauliString) else PauliString(g) for g in labels)
        return cls(generators=gens, qubit_count=gens[0].qubit_count if gens else 0)

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def is_full(self) -> bool:
        return self.generator_count == self.qubit_count

    def elements(self) -> tuple[PauliString, ...]:
        """生成元张成的 2^g - 1 个非平凡群元 (忽略相位), 按子集掩码排序"""
        out = []
        for mask in range(1, 2 ** self.generator_count):
            chosen = [g for j, g in enumerate(self.generators) if mask >> j & 1]
            out.append(reduce(multiply_ignoring_phase, chosen))
        return tuple(out)

    def __str__(self) -> str:
        return ",".join(g.labels for g in self.generators)
