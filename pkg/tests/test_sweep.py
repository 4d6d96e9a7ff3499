"""精度扫描测试用例"""

import math

import numpy as np
import pytest
from scipy.linalg import block_diag

from qptlab.common.enums import SchemeTag
from qptlab.common.exceptions import InvalidArgumentError
from qptlab.config import SweepPoolConfig
from qptlab.core import kraus_to_chi, preset_channel
from qptlab.qpt import (
    build_design_matrix,
    build_plan,
    precision_sweep,
    sweep_points_from_csv,
    sweep_to_csv,
    validate_sweep,
)
from qptlab.qpt.simulate import exact_distributions
from qptlab.utils.thread_pool import TrialPool

SHOTS = [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6]
TRIALS = 50


def element_variance(scheme: SchemeTag, channel) -> float:
    """单次抽样下 χ 逐元素方差的均值, 由多项分布协方差经伪逆传播"""
    plan = build_plan(scheme, 1)
    pinv = np.linalg.pinv(build_design_matrix(plan).entries)
    blocks = []
    for dist, k in zip(exact_distributions(plan, channel), plan.outcome_counts):
        p = dist.probabilities[:k]
        blocks.append(np.diag(p) - np.outer(p, p))
    var = np.diag(pinv @ block_diag(*blocks) @ pinv.T)
    # 前 4 个为对角元, 其余每个上三角参数在 χ 中出现两次
    return float(var[:4].sum() + 2 * var[4:].sum()) / 16


@pytest.fixture(scope="module")
def dcqd_report():
    plan = build_plan(SchemeTag.DCQD, 1)
    return precision_sweep(plan, preset_channel("depolarizing(0.3)"), SHOTS, TRIALS, seed=0)


@pytest.mark.unit
class TestValidateSweep:
    """扫描参数检查"""

    @pytest.mark.parametrize("shots,trials", [
        ([10, 100, 1000], 20),
        ([10, 20, 50, 90], 20),
        ([10, 100, 1000, 10000], 19),
        ([0, 100, 1000, 10000], 20),
        ([10, 10, 10, 1000], 20),
    ])
    def test_rejected(self, shots, trials):
        with pytest.raises(InvalidArgumentError) as exc_info:
            validate_sweep(shots, trials)
        assert exc_info.value.exit_code == 2

    def test_accepted(self):
        assert validate_sweep([1000, 10, 100, 10000, 100], 20) == [10, 100, 1000, 10000]

    def test_duplicates_do_not_count(self, depolarizing_channel):
        plan = build_plan(SchemeTag.DCQD, 1)
        with pytest.raises(InvalidArgumentError):
            precision_sweep(plan, depolarizing_channel, [10, 10, 10, 1000], 20)


@pytest.mark.unit
class TestSweepDeterminism:
    """结果只由种子决定, 与线程数无关"""

    def test_worker_count_does_not_matter(self, depolarizing_channel):
        plan = build_plan(SchemeTag.DCQD, 1)
        shots = [10, 100, 1000, 10000]
        with TrialPool(SweepPoolConfig(max_workers=1)) as serial:
            a = precision_sweep(plan, depolarizing_channel, shots, 20, seed=5, pool=serial)
        with TrialPool(SweepPoolConfig(max_workers=4)) as parallel:
            b = precision_sweep(plan, depolarizing_channel, shots, 20, seed=5, pool=parallel)
        assert a == b

    def test_csv_round_trip(self, depolarizing_channel):
        plan = build_plan(SchemeTag.DCQD, 1)
        report = precision_sweep(plan, depolarizing_channel, [10, 100, 1000, 10000], 20, seed=1)
        text = sweep_to_csv(report)
        assert text.splitlines()[0] == "shots,trials,rms_error,element_std"
        assert sweep_points_from_csv(text) == report.points

    def test_csv_bad_header(self):
        with pytest.raises(ValueError):
            sweep_points_from_csv("n,rms\n1,2\n")


@pytest.mark.slow
class TestShotNoiseScaling:
    """误差按 1/√N 下降"""

    def test_slope(self, dcqd_report):
        assert dcqd_report.slope == pytest.approx(-0.5, abs=0.05)
        assert [p.shots for p in dcqd_report.points] == SHOTS
        errors = [p.rms_error for p in dcqd_report.points]
        assert errors == sorted(errors, reverse=True)

    def test_povm_is_noisier_than_dcqd(self, dcqd_report, depolarizing_channel):
        """同样的每配置抽样次数下, 单一 POVM 的逐元素标准差约为 DCQD 的两倍 (理论值约 2.12)"""
        povm = precision_sweep(build_plan(SchemeTag.AAPT_POVM, 1), depolarizing_channel, SHOTS, TRIALS, seed=0)
        ratios = [p.element_std / d.element_std for p, d in zip(povm.points, dcqd_report.points)]
        mean_ratio = math.exp(sum(math.log(r) for r in ratios) / len(ratios))
        assert 1.4 <= mean_ratio <= 2.6


@pytest.mark.unit
class TestNoiseModel:
    """由设计矩阵预测的抽样噪声"""

    def test_tetrahedral_povm_variance(self, depolarizing_channel):
        """对偶算符范数平方恒为 25, 总方差只与 tr ρ² 有关"""
        purity = float(np.sum(np.abs(kraus_to_chi(depolarizing_channel).entries) ** 2))
        predicted = element_variance(SchemeTag.AAPT_POVM, depolarizing_channel)
        assert predicted == pytest.approx((25 - purity) / 16, rel=1e-9)

    def test_povm_to_dcqd_ratio(self, depolarizing_channel):
        ratio = math.sqrt(
            element_variance(SchemeTag.AAPT_POVM, depolarizing_channel)
            / element_variance(SchemeTag.DCQD, depolarizing_channel)
        )
        assert 1.4 <= ratio <= 2.6
