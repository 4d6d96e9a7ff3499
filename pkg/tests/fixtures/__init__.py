"""测试 fixtures 模块"""

# 导入所有 fixtures，使 pytest 能够发现它们
from tests.fixtures.channel_fixtures import (  # noqa: F401
    damping_channel,
    depolarizing_channel,
    lab_env,
    random_channels,
    rng,
)
