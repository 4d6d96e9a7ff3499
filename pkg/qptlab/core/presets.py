"""预置信道: 损耗、去极化、比特翻转、振幅阻尼 (T1)、阻尼+退相位 (T1/T2)

多比特预置信道是单比特信道的张量幂.
"""

import re
from functools import reduce

import numpy as np
from pydantic import Field, field_validator, model_validator

from qptlab.common.model import BaseDataModel
from qptlab.core.channels import QuantumChannel

_PRESET_ARITY = {
    "identity": 0,
    "depolarizing": 1,
    "bit-flip": 1,
    "amplitude-damping": 1,
    "phase-damping": 1,
    "damping-dephasing": 2,
    "loss": 1,
}

_PRESET_PATTERN = re.compile(r"^\s*([a-z\-]+)\s*(?:\(([^()]*)\))?\s*$")


class ChannelPreset(BaseDataModel):
    """形如 NAME 或 NAME(p1, p2) 的预置信道描述"""

    name: str = Field(..., description="预置信道名称")
    params: tuple[float, ...] = Field(default=(), description="信道参数, 均位于 [0, 1]")

    @field_validator("name")
    def validate_name(cls, v):
        if v not in _PRESET_ARITY:
            raise ValueError(f"未知预置信道 {v!r}, 可选: {', '.join(_PRESET_ARITY)}")
        return v

    @model_validator(mode="after")
    def validate_params(self) -> "ChannelPreset":
        arity = _PRESET_ARITY[self.name]
        if len(self.params) != arity:
            raise ValueError(f"{self.name} 需要 {arity} 个参数, 实际 {len(self.params)} 个")
        for p in self.params:
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{self.name} 的参数 {p} 不在 [0, 1] 内")
        return self

    @classmethod
    def parse(cls, text: str) -> "ChannelPreset":
        match = _PRESET_PATTERN.match(text.lower())
        if match is None:
            raise ValueError(f"无法解析信道描述 {text!r}")
        name, raw = match.groups()
        params = tuple(float(x) for x in raw.split(",")) if raw and raw.strip() else ()
        return cls(name=name, params=params)

    def __str__(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(repr(p) for p in self.params)})"


def amplitude_damping_kraus(gamma: float) -> list[np.ndarray]:
    return [
        np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex),
        np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex),
    ]


def phase_damping_kraus(lam: float) -> list[np.ndarray]:
    return [
        np.array([[1, 0], [0, np.sqrt(1 - lam)]], dtype=complex),
        np.array([[0, 0], [0, np.sqrt(lam)]], dtype=complex),
    ]


def single_qubit_preset(preset: ChannelPreset) -> QuantumChannel:
    eye = np.eye(2, dtype=complex)
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    y = np.array([[0, -1j], [1j, 0]], dtype=complex)
    z = np.array([[1, 0], [0, -1]], dtype=complex)
    name, params = preset.name, preset.params
    if name == "identity":
        ops = [eye]
    elif name == "depolarizing":
        (p,) = params
        ops = [np.sqrt(1 - 3 * p / 4) * eye] + [np.sqrt(p / 4) * s for s in (x, y, z)]
    elif name == "bit-flip":
        (p,) = params
        ops = [np.sqrt(1 - p) * eye, np.sqrt(p) * x]
    elif name == "amplitude-damping":
        ops = amplitude_damping_kraus(params[0])
    elif name == "phase-damping":
        ops = phase_damping_kraus(params[0])
    elif name == "damping-dephasing":
        gamma, lam = params
        damping = QuantumChannel.from_kraus(amplitude_damping_kraus(gamma))
        return damping.then(QuantumChannel.from_kraus(phase_damping_kraus(lam)))
    else:  # loss
        (eta,) = params
        ops = [np.sqrt(1 - eta) * eye]
    return QuantumChannel.from_kraus(ops)


def preset_channel(preset: ChannelPreset | str, qubit_count: int = 1) -> QuantumChannel:
    if isinstance(preset, str):
        preset = ChannelPreset.parse(preset)
    single = single_qubit_preset(preset)
    return reduce(lambda a, b: a.tensor(b), [single] * qubit_count)
