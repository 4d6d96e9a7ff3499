"""模拟与线性反演重构测试用例"""

import itertools

import numpy as np
import pytest

from qptlab.common.enums import SchemeTag
from qptlab.common.exceptions import DimensionMismatchError, RankDeficientError
from qptlab.core import QuantumChannel, kraus_to_chi, preset_channel, random_channel
from qptlab.qpt import (
    build_design_matrix,
    build_plan,
    design_matrix_for_configs,
    reconstruct_chi,
    simulate_experiment,
)


@pytest.fixture(scope="module")
def designs():
    """每个方案 n = 1 的 (方案, 设计矩阵)"""
    out = {}
    for scheme in SchemeTag:
        plan = build_plan(scheme, 1)
        out[scheme] = (plan, build_design_matrix(plan))
    return out


@pytest.mark.integration
class TestExactReconstruction:
    """精确统计下各方案重构出同一个 χ"""

    def test_random_channels_all_schemes(self, designs, random_channels):
        for ch in random_channels:
            truth = kraus_to_chi(ch)
            estimates = {}
            for scheme, (plan, design) in designs.items():
                data = simulate_experiment(plan, ch)
                estimate = reconstruct_chi(design, data.frequencies())
                assert estimate.max_error(truth) < 1e-8, scheme
                assert estimate.rank == 16
                estimates[scheme] = estimate.chi
            for a, b in itertools.combinations(estimates.values(), 2):
                assert a.max_distance(b) < 1e-8

    def test_identity_is_exact(self, designs):
        plan, design = designs[SchemeTag.DCQD]
        estimate = reconstruct_chi(design, simulate_experiment(plan, QuantumChannel.identity(1)).frequencies())
        assert estimate.max_error(kraus_to_chi(QuantumChannel.identity(1))) < 1e-10
        assert estimate.residual_norm < 1e-10
        assert estimate.is_physical

    def test_non_trace_preserving_loss(self, designs):
        ch = preset_channel("loss(0.25)")
        for plan, design in designs.values():
            estimate = reconstruct_chi(design, simulate_experiment(plan, ch).frequencies())
            assert estimate.chi.element("I", "I").real == pytest.approx(0.75, abs=1e-10)
            assert not estimate.chi.is_trace_preserving()

    def test_two_qubit_dcqd(self, rng):
        plan = build_plan(SchemeTag.DCQD, 2)
        ch = random_channel(2, 2, rng, max_trace_deficit=0.2)
        estimate = reconstruct_chi(build_design_matrix(plan), simulate_experiment(plan, ch).frequencies())
        assert estimate.max_error(kraus_to_chi(ch)) < 1e-8


@pytest.mark.unit
class TestSampledReconstruction:
    """抽样统计"""

    def test_sampling_is_deterministic(self, designs, depolarizing_channel):
        plan, design = designs[SchemeTag.DCQD]
        first = simulate_experiment(plan, depolarizing_channel, shots=10 ** 6, seed=0)
        second = simulate_experiment(plan, depolarizing_channel, shots=10 ** 6, seed=0)
        assert np.array_equal(first.frequencies(), second.frequencies())
        a = reconstruct_chi(design, first.frequencies())
        b = reconstruct_chi(design, second.frequencies())
        assert np.array_equal(a.chi.entries, b.chi.entries)

    def test_seed_changes_counts(self, designs, depolarizing_channel):
        plan, _ = designs[SchemeTag.DCQD]
        first = simulate_experiment(plan, depolarizing_channel, shots=1000, seed=0)
        second = simulate_experiment(plan, depolarizing_channel, shots=1000, seed=1)
        assert not np.array_equal(first.frequencies(), second.frequencies())

    def test_sampled_error_is_small(self, designs, depolarizing_channel):
        plan, design = designs[SchemeTag.DCQD]
        data = simulate_experiment(plan, depolarizing_channel, shots=10 ** 6, seed=0)
        estimate = reconstruct_chi(design, data.frequencies())
        assert estimate.max_error(kraus_to_chi(depolarizing_channel)) < 0.01


@pytest.mark.unit
class TestReconstructionErrors:
    """不完备设计与维度错误"""

    def test_rank_deficient_design(self, designs):
        plan, _ = designs[SchemeTag.DCQD]
        partial = design_matrix_for_configs(plan.configs[:3], 1)
        with pytest.raises(RankDeficientError) as exc_info:
            reconstruct_chi(partial, np.zeros(partial.entries.shape[0]))
        assert exc_info.value.exit_code == 3

    def test_frequency_length_mismatch(self, designs):
        _, design = designs[SchemeTag.DCQD]
        with pytest.raises(DimensionMismatchError):
            reconstruct_chi(design, np.zeros(3))

    def test_channel_qubit_mismatch(self, designs):
        plan, _ = designs[SchemeTag.DCQD]
        with pytest.raises(DimensionMismatchError):
            simulate_experiment(plan, QuantumChannel.identity(2))
