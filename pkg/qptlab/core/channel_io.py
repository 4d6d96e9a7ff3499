"""信道文件读写

格式 (JSON):
    {"qubit_count": m, "kraus_operators": [[[[re, im], ...], ...], ...]}
矩阵按行优先排列, 每个元素为 [实部, 虚部].
"""

import logging
from pathlib import Path

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from qptlab.common.exceptions import ChannelParseError
from qptlab.core.channels import QuantumChannel
from qptlab.utils.file_op import read_text, write_text_lf

logger = logging.getLogger(__name__)

ComplexPair = tuple[float, float]


class ChannelDocument(BaseModel):
    """信道文件的数据模型"""

    model_config = ConfigDict(extra="forbid")

    qubit_count: int = Field(..., ge=1, description="信道作用的比特数")
    kraus_operators: list[list[list[ComplexPair]]] = Field(
        ..., min_length=1, description="Kraus 算符, 行优先的 [re, im] 嵌套数组")

    @field_validator("kraus_operators")
    @classmethod
    def validate_square(cls, v):
        for k, op in enumerate(v):
            if not op or any(len(row) != len(op) for row in op):
                raise ValueError(f"第 {k} 个 Kraus 算符不是方阵")
        return v

    @classmethod
    def from_channel(cls, ch: QuantumChannel) -> "ChannelDocument":
        ops = [
            [[(float(z.real), float(z.imag)) for z in row] for row in op]
            for op in ch.kraus_operators
        ]
        return cls(qubit_count=ch.qubit_count, kraus_operators=ops)

    def to_channel(self) -> QuantumChannel:
        ops = [
            np.array([[complex(re, im) for re, im in row] for row in op], dtype=complex)
            for op in self.kraus_operators
        ]
        return QuantumChannel(kraus_operators=ops, qubit_count=self.qubit_count)


def parse_channel(text: str) -> QuantumChannel:
    """解析信道文档; 结构错误或非 CP 映射均视为解析失败"""
    try:
        return ChannelDocument.model_validate_json(text).to_channel()
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        raise ChannelParseError(
            f"信道文件解析失败: {location} {first.get('msg', '')}".strip(),
            detail={"errors": e.error_count()},
        ) from e


def serialize_channel(ch: QuantumChannel) -> str:
    return ChannelDocument.from_channel(ch).model_dump_json() + "\n"


def load_channel(path: str | Path) -> QuantumChannel:
    try:
        text = read_text(path)
    except (OSError, UnicodeDecodeError) as e:
        raise ChannelParseError(f"无法读取信道文件 {path}: {e}") from e
    ch = parse_channel(text)
    logger.info(f"loaded channel file {path}: {ch.qubit_count} qubit(s), {len(ch.kraus_operators)} Kraus operators")
    return ch


def save_channel(ch: QuantumChannel, path: str | Path) -> None:
    write_text_lf(path, serialize_channel(ch))
