"""运行 traceid: 每次命令一个, 精度扫描的每个试验派生一个子 id"""

import contextvars
import uuid
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Optional

# 线程池任务在提交时复制上下文, 试验内可见所属运行的 id
traceid_context: contextvars.ContextVar[Optional[str]] = contextvars.ContextVar(
    "traceid", default=None
)


def generate_traceid() -> str:
    return uuid.uuid4().hex[:12]


def set_traceid(traceid: str) -> contextvars.Token:
    return traceid_context.set(traceid)


def get_traceid() -> str:
    """未设置时返回 unknown"""
    traceid = traceid_context.get()
    return traceid if traceid else "unknown"


def clear_traceid() -> None:
    traceid_context.set(None)


def trial_traceid(run_id: str, shots: int, trial: int) -> str:
    return f"{run_id}-N{shots}-t{trial}"


@contextmanager
def traceid_scope(traceid: str | None = None) -> Iterator[str]:
    """在 with 块内使用给定 (或新生成) 的 traceid, 退出时恢复原值"""
    value = traceid or generate_traceid()
    token = traceid_context.set(value)
    try:
        yield value
    finally:
        traceid_context.reset(token)
