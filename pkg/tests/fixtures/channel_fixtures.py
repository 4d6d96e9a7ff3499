"""信道与随机数相关的 fixtures"""

import numpy as np
import pytest

from qptlab.core import QuantumChannel, preset_channel, random_channel

RANDOM_CHANNEL_COUNT = 100


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture(scope="session")
def random_channels() -> list[QuantumChannel]:
    """100 个单比特随机 CP 映射, 迹损失至多 0.5, Kraus 个数 1..4"""
    gen = np.random.default_rng(7)
    return [
        random_channel(1, int(gen.integers(1, 5)), gen, max_trace_deficit=0.5 if i % 2 else 0.0)
        for i in range(RANDOM_CHANNEL_COUNT)
    ]


@pytest.fixture
def depolarizing_channel() -> QuantumChannel:
    return preset_channel("depolarizing(0.3)")


@pytest.fixture
def damping_channel() -> QuantumChannel:
    return preset_channel("damping-dephasing(0.2,0.1)")


@pytest.fixture
def lab_env(tmp_path, monkeypatch):
    """命令行测试: 日志写入临时目录"""
    monkeypatch.setenv("QPTLAB_LOG_DIR", str(tmp_path / "logs"))
    return tmp_path
