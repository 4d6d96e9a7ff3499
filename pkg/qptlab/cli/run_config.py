"""命令行运行参数模型"""

import re
from pathlib import Path

from pydantic import Field, field_validator, model_validator

from qptlab.common.enums import CommandName, Locality, OutputFormat, SchemeTag
from qptlab.common.model import BaseDataModel
from qptlab.core.channel_io import load_channel
from qptlab.core.channels import QuantumChannel
from qptlab.core.presets import ChannelPreset, preset_channel

_RANGE_PATTERN = re.compile(r"^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$")


def parse_n_range(text: str) -> list[int]:
    """解析 INT 或 A..B, B < A 时为空范围"""
    match = _RANGE_PATTERN.match(text)
    if match is None:
        raise ValueError(f"无法解析比特数 {text!r}, 应为 INT 或 A..B")
    low, high = match.groups()
    if high is None:
        return [int(low)]
    return list(range(int(low), int(high) + 1))


def parse_count(text: str) -> int:
    """抽样次数, 允许 1e6 这类写法但必须为整数"""
    text = text.strip()
    if text.isdigit():
        return int(text)
    value = float(text)
    if not value.is_integer():
        raise ValueError(f"抽样次数必须为整数, 实际 {text!r}")
    return int(value)


class RunConfig(BaseDataModel):
    """一次命令行运行的全部参数"""

    command: CommandName
    scheme: SchemeTag | None = Field(default=None, description="过程层析方案")
    n: list[int] = Field(default_factory=lambda: [1], description="系统比特数或范围")
    channel: ChannelPreset | None = Field(default=None, description="预置信道")
    channel_file: str | None = Field(default=None, description="信道文件路径")
    shots: list[int] = Field(default_factory=list, description="每个配置的抽样次数")
    exact: bool = Field(default=False, description="使用精确概率")
    seed: int = Field(default=0, ge=0, description="随机种子")
    epsilon: str = Field(default="0.1", description="目标精度, 保留十进制写法以便精确计算")
    trials: int = Field(default=50, ge=1, description="精度扫描每个抽样次数的重复次数")
    out: str | None = Field(default=None, description="输出路径, 缺省写到标准输出")
    output_format: OutputFormat = Field(default=OutputFormat.TEXT, description="输出格式")
    variants: bool = Field(default=False, description="资源表附加方案变体行")
    locality: Locality = Field(default=Locality.NONLOCAL_TWO_BODY, description="门模型")
    m: int | None = Field(default=None, ge=1, description="partition 命令的比特数")
    relaxation_time: float | None = Field(default=None, gt=0, description="演化时间, 给出时附带 T1/T2 分析")

    @field_validator("scheme", mode="before")
    def validate_scheme(cls, v):
        return None if v is None else SchemeTag.parse(v)

    @field_validator("n", mode="before")
    def validate_n(cls, v):
        if isinstance(v, str):
            v = parse_n_range(v)
        elif isinstance(v, int):
            v = [v]
        if any(n < 1 for n in v):
            raise ValueError("系统比特数必须为正")
        return v

    @field_validator("channel", mode="before")
    def validate_channel(cls, v):
        if isinstance(v, str):
            return ChannelPreset.parse(v)
        return v

    @field_validator("shots", mode="before")
    def validate_shots(cls, v):
        if isinstance(v, str):
            v = [parse_count(x) for x in v.split(",") if x.strip()]
        elif isinstance(v, int):
            v = [v]
        if any(s < 1 for s in v):
            raise ValueError("抽样次数必须为正")
        return v

    @field_validator("epsilon", mode="before")
    def validate_epsilon(cls, v):
        text = str(v).strip()
        if float(text) <= 0:
            raise ValueError(f"精度 ε 必须为正, 实际 {text}")
        return text

    @model_validator(mode="after")
    def validate_command(self) -> "RunConfig":
        cmd = self.command
        if self.channel is not None and self.channel_file is not None:
            raise ValueError("--channel 与 --channel-file 只能给出一个")
        if self.exact and self.shots:
            raise ValueError("--shots 与 --exact 只能给出一个")
        if cmd in (CommandName.PLAN, CommandName.SIMULATE, CommandName.SWEEP):
            if self.scheme is None:
                raise ValueError(f"{cmd.value} 命令需要 --scheme")
            if len(self.n) != 1:
                raise ValueError(f"{cmd.value} 命令需要单个 --n")
        if cmd in (CommandName.SIMULATE, CommandName.SWEEP):
            if self.channel is None and self.channel_file is None:
                raise ValueError(f"{cmd.value} 命令需要 --channel 或 --channel-file")
        if cmd == CommandName.SIMULATE and len(self.shots) > 1:
            raise ValueError("simulate 命令只接受一个 --shots")
        if cmd == CommandName.SWEEP and self.exact:
            raise ValueError("精度扫描需要抽样, 不能使用 --exact")
        if cmd == CommandName.PARTITION and self.m is None:
            raise ValueError("partition 命令需要 --m")
        return self

    @property
    def single_n(self) -> int:
        return self.n[0]

    @property
    def shots_per_config(self) -> int | None:
        """None 表示精确概率"""
        return None if self.exact or not self.shots else self.shots[0]

    @property
    def channel_label(self) -> str:
        if self.channel is not None:
            return str(self.channel)
        return Path(self.channel_file).name if self.channel_file else "none"

    def target_channel(self, qubit_count: int) -> QuantumChannel:
        if self.channel_file is not None:
            return load_channel(self.channel_file)
        return preset_channel(self.channel, qubit_count)
