"""方案与门模型枚举"""

from enum import Enum


class SchemeTag(str, Enum):
    """过程层析方案"""
    SQPT = "sqpt"
    AAPT_SEPARABLE = "aapt-sep"
    AAPT_MUB = "aapt-mub"
    AAPT_POVM = "aapt-povm"
    DCQD = "dcqd"

    @classmethod
    def parse(cls, value: "str | SchemeTag") -> "SchemeTag":
        """按命令行写法或枚举名解析"""
        if isinstance(value, cls):
            return value
        text = str(value).strip()
        for tag in cls:
            if text.lower() == tag.value or text.upper() == tag.name:
                return tag
        raise ValueError(f"未知方案: {value}")


class Locality(str, Enum):
    """两体相互作用的可达性"""
    NONLOCAL_TWO_BODY = "nonlocal-two-body"  # 任意两比特之间
    LOCAL_TWO_BODY = "local-two-body"  # 仅最近邻


class CommandName(str, Enum):
    """命令行子命令"""
    PLAN = "plan"
    SIMULATE = "simulate"
    RESOURCES = "resources"
    SWEEP = "sweep"
    PARTITION = "partition"


class OutputFormat(str, Enum):
    CSV = "csv"
    TEXT = "text"
