"""测量、结果分布与抽样测试用例"""

import numpy as np
import pytest
from pydantic import ValidationError

from qptlab.common.exceptions import DimensionMismatchError, InvalidArgumentError, MeasurementError, SizeLimitError
from qptlab.core import (
    DensityMatrix,
    PauliString,
    apply_channel,
    kraus_to_chi,
    maximally_entangled,
    pauli_labels,
    pauli_matrix,
    preset_channel,
    product_ket,
)
from qptlab.measurement import (
    LOSS_LABEL,
    TETRAHEDRON,
    OutcomeDistribution,
    PovmMeasurement,
    ProjectiveMeasurement,
    bell_circuit,
    bell_measurement,
    config_seed,
    effect_span_rank,
    outcome_probabilities,
    records_from_csv,
    records_to_csv,
    sample_outcomes,
    setting_to_measurement,
    tetrahedral_povm,
    trial_seed,
)
from qptlab.measurement.dump import OutcomeRecord
from qptlab.mub import MeasurementSetting


@pytest.mark.unit
class TestProjectiveMeasurement:
    """投影测量的不变量"""

    def test_non_orthogonal_rejected(self):
        plus = np.full((2, 2), 0.5, dtype=complex)
        zero = np.diag([1, 0]).astype(complex)
        with pytest.raises(ValidationError):
            ProjectiveMeasurement(projectors=[zero, plus], labels=("0", "+"))

    def test_non_projector_rejected(self):
        with pytest.raises(ValidationError):
            ProjectiveMeasurement(projectors=[np.eye(2) * 0.5], labels=("half",))

    def test_loss_label_reserved(self):
        with pytest.raises(ValidationError):
            ProjectiveMeasurement(projectors=[np.eye(2)], labels=(LOSS_LABEL,))

    def test_setting_measurement(self):
        meas = setting_to_measurement(MeasurementSetting.of(["XX", "ZZ"]), include_loss=True)
        assert meas.outcome_count == 4
        assert meas.outcome_labels == ("++", "+-", "-+", "--", LOSS_LABEL)
        assert np.allclose(meas.projectors.sum(axis=0), np.eye(4))

    def test_bell_circuit_is_unitary(self):
        u = bell_circuit(2)
        assert np.allclose(u @ u.conj().T, np.eye(16))

    def test_bell_outcomes_ordered_by_pauli(self):
        """第 m 个结果为 (σ_m ⊗ I)|Φ+>"""
        for n in (1, 2):
            meas = bell_measurement(n)
            assert meas.labels == pauli_labels(n)
            for m, label in enumerate(meas.labels):
                vec = np.kron(pauli_matrix(label), np.eye(2 ** n)) @ maximally_entangled(n).amplitudes
                assert np.allclose(meas.projectors[m], np.outer(vec, vec.conj()))

    def test_bell_matches_stabilizer_pairs(self):
        """Bell 投影即各对 {Z_i Z_{i+n}, X_i X_{i+n}} 的共同本征投影"""
        for n in (1, 2):
            gens = []
            for i in range(n):
                gens += [PauliString("ZZ").embed([i, i + n], 2 * n), PauliString("XX").embed([i, i + n], 2 * n)]
            stabilizer = setting_to_measurement(MeasurementSetting(generators=gens, qubit_count=2 * n))
            bell = bell_measurement(n)
            for proj in bell.projectors:
                assert any(np.allclose(proj, other) for other in stabilizer.projectors)

    def test_bell_measurement_limits(self):
        with pytest.raises(SizeLimitError):
            bell_measurement(3)
        with pytest.raises(InvalidArgumentError):
            bell_measurement(0)

    def test_bell_reads_chi_diagonal(self, random_channels):
        """Bell 态输入 + Bell 测量: 概率即 (χ_II, χ_XX, χ_YY, χ_ZZ)"""
        meas = bell_measurement(1, include_loss=True)
        rho = maximally_entangled(1).density()
        for ch in random_channels:
            dist = outcome_probabilities(meas, apply_channel(ch.extend(1), rho))
            chi = kraus_to_chi(ch)
            assert np.max(np.abs(dist.probabilities[:4] - np.diag(chi.entries).real)) < 1e-12
            assert dist.probabilities[4] == pytest.approx(1 - np.trace(chi.entries).real, abs=1e-12)


@pytest.mark.unit
class TestPovm:
    """四面体 SIC POVM 的张量积"""

    def test_two_qubit_povm_is_informationally_complete(self):
        povm = tetrahedral_povm(2)
        assert povm.outcome_count == 16
        assert povm.informationally_complete
        assert effect_span_rank(povm.effects) == 16
        assert np.allclose(povm.effects.sum(axis=0), np.eye(4))
        assert povm.labels[0] == "t00"
        assert len(set(povm.labels)) == 16

    def test_single_qubit_dual_frame(self):
        """对偶算符 6E - I 与效应两两正交, 范数平方为 5"""
        effects = tetrahedral_povm(1).effects
        duals = 6 * effects - np.eye(2)
        assert np.allclose(np.einsum("jab,kba->jk", effects, duals), np.eye(4))
        assert np.allclose(np.einsum("kab,kba->k", duals, duals).real, 5.0)
        assert np.allclose(np.linalg.norm(TETRAHEDRON, axis=1), 1.0)

    def test_non_positive_qubit_count(self):
        with pytest.raises(InvalidArgumentError):
            tetrahedral_povm(0)

    def test_effects_must_sum_to_identity(self):
        with pytest.raises(ValidationError):
            PovmMeasurement(effects=[np.eye(2) * 0.5], labels=("a",))

    def test_effects_must_be_psd(self):
        with pytest.raises(ValidationError):
            PovmMeasurement(effects=[np.diag([1.5, 1.0]), np.diag([-0.5, 0.0])], labels=("a", "b"))

    def test_with_loss(self):
        assert tetrahedral_povm().with_loss().outcome_labels[-1] == LOSS_LABEL


@pytest.mark.unit
class TestOutcomeDistribution:
    """Born 规则与抽样"""

    def test_born_rule(self):
        meas = setting_to_measurement(MeasurementSetting.of(["Z"]))
        dist = outcome_probabilities(meas, product_ket(["+"]).density())
        assert np.allclose(dist.probabilities, [0.5, 0.5])
        assert dist.labels == ("+", "-")

    def test_non_trace_preserving_requires_loss(self):
        meas = setting_to_measurement(MeasurementSetting.of(["Z"]))
        rho = apply_channel(preset_channel("loss(0.3)"), product_ket(["0"]).density())
        with pytest.raises(MeasurementError):
            outcome_probabilities(meas, rho)
        dist = outcome_probabilities(meas.with_loss(), rho)
        assert np.allclose(dist.probabilities, [0.7, 0.0, 0.3])

    def test_dimension_mismatch(self):
        meas = bell_measurement(1)
        with pytest.raises(DimensionMismatchError):
            outcome_probabilities(meas, DensityMatrix.maximally_mixed(1))

    def test_invalid_distribution_rejected(self):
        with pytest.raises(ValidationError):
            OutcomeDistribution(probabilities=[0.6, 0.6], labels=("a", "b"))

    def test_sampling_is_reproducible(self):
        dist = OutcomeDistribution(probabilities=[0.2, 0.3, 0.5], labels=("a", "b", "c"))
        first = sample_outcomes(dist, 1000, seed=11)
        second = sample_outcomes(dist, 1000, seed=11)
        assert np.array_equal(first.counts, second.counts)
        assert int(first.counts.sum()) == 1000
        assert np.allclose(first.frequencies(), first.counts / 1000)

    def test_sampling_frequencies_near_probabilities(self):
        dist = OutcomeDistribution(probabilities=[0.25] * 4, labels=("a", "b", "c", "d"))
        sampled = sample_outcomes(dist, 10 ** 6, seed=0)
        assert np.all(np.abs(sampled.frequencies() - 0.25) < 0.005)

    def test_sampling_is_unbiased(self):
        """200 个种子、每次 10^4 次抽样, 平均频率落在 5 倍标准误差内"""
        probs = np.array([0.1, 0.2, 0.3, 0.4])
        dist = OutcomeDistribution(probabilities=probs, labels=("a", "b", "c", "d"))
        shots, repeats = 10 ** 4, 200
        mean = np.mean([sample_outcomes(dist, shots, seed=s).frequencies() for s in range(repeats)], axis=0)
        stderr = np.sqrt(probs * (1 - probs) / (shots * repeats))
        assert np.all(np.abs(mean - probs) < 5 * stderr)

    def test_sampling_rejects_non_positive_shots(self):
        dist = OutcomeDistribution(probabilities=[1.0], labels=("a",))
        with pytest.raises(InvalidArgumentError):
            sample_outcomes(dist, 0, seed=0)

    def test_seed_derivation(self):
        assert config_seed(5, 3) == 6
        assert trial_seed(0, 1000, 1) == trial_seed(0, 1000, 1)
        assert trial_seed(0, 1000, 1) != trial_seed(0, 1000, 2)

    def test_records_csv_round_trip(self):
        dist = OutcomeDistribution(probabilities=[0.25, 0.75], labels=("+", "-"))
        exact = OutcomeRecord.from_distribution("in=0 meas=Z", dist)
        sampled = OutcomeRecord.from_distribution("in=1 meas=Z", sample_outcomes(dist, 40, seed=3))
        text = records_to_csv([exact, sampled])
        assert text.startswith("config,outcome,probability,frequency,count\n")
        assert records_from_csv(text) == [exact, sampled]
