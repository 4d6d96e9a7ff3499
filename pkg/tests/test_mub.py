"""测量设置、Pauli 群划分与互无偏基测试用例"""

import numpy as np
import pytest
from pydantic import ValidationError

from qptlab.common.exceptions import InvalidArgumentError, PartitionSearchError
from qptlab.core import pauli_labels, pauli_matrix
from qptlab.mub import (
    MeasurementSetting,
    MubFamily,
    check_partition,
    common_eigenbasis,
    gf2_rank,
    mub_family,
    partition_dump,
    pauli_partition,
    two_qubit_mub,
)


@pytest.mark.unit
class TestMeasurementSetting:
    """对易、独立生成元"""

    def test_valid_setting(self):
        s = MeasurementSetting.of(["XX", "ZZ"])
        assert s.is_full()
        assert [p.labels for p in s.elements()] == ["XX", "ZZ", "YY"]
        assert str(s) == "XX,ZZ"

    @pytest.mark.parametrize("labels", [
        ["XI", "ZI"],
        ["XX", "XX"],
        ["XX", "ZZ", "YY"],
        ["II"],
        ["X", "ZZ"],
    ])
    def test_invalid_settings(self, labels):
        with pytest.raises(ValidationError):
            MeasurementSetting.of(labels)

    def test_gf2_rank(self):
        assert gf2_rank([0b011, 0b101, 0b110]) == 2
        assert gf2_rank([0b001, 0b010, 0b100]) == 3
        assert gf2_rank([]) == 0


@pytest.mark.unit
class TestPauliPartition:
    """4^m - 1 个非平凡 Pauli 串划分为 2^m + 1 个对易类"""

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_partition_covers_group(self, m):
        settings = pauli_partition(m)
        assert len(settings) == 2 ** m + 1
        covered = [p.labels for s in settings for p in s.elements()]
        assert len(covered) == len(set(covered)) == 4 ** m - 1
        assert set(covered) == set(pauli_labels(m)) - {"I" * m}
        check_partition(settings, m)

    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    def test_classes_are_commuting(self, m):
        for s in pauli_partition(m):
            mats = [pauli_matrix(p) for p in s.elements()]
            for a in mats:
                for b in mats:
                    assert np.allclose(a @ b, b @ a)

    def test_two_qubit_classes(self):
        triples = [[p.labels for p in s.elements()] for s in pauli_partition(2)]
        assert triples == [
            ["XI", "IX", "XX"],
            ["YI", "IY", "YY"],
            ["ZI", "IZ", "ZZ"],
            ["XY", "YZ", "ZX"],
            ["YX", "ZY", "XZ"],
        ]

    @pytest.mark.parametrize("m", [0, 5])
    def test_unsupported_size(self, m):
        with pytest.raises(PartitionSearchError) as exc_info:
            pauli_partition(m)
        assert exc_info.value.exit_code == 2

    def test_overlapping_partition_rejected(self):
        settings = pauli_partition(2)
        settings[1] = settings[0]
        with pytest.raises(PartitionSearchError):
            check_partition(settings, 2)

    def test_dump_format(self):
        dump = partition_dump(pauli_partition(2))
        lines = dump.split("\n")
        assert lines[0] == "XI,IX,XX"
        assert lines[-1] == ""
        assert len(lines) == 6

    def test_dump_is_deterministic(self):
        assert partition_dump(pauli_partition(3)) == partition_dump(pauli_partition(3))


@pytest.mark.unit
class TestMubFamily:
    """两比特五个互无偏基"""

    def test_five_unbiased_bases(self):
        family = two_qubit_mub()
        assert len(family) == 5
        for i, a in enumerate(family.bases):
            assert np.allclose(a.conj().T @ a, np.eye(4), atol=1e-12)
            for b in family.bases[i + 1:]:
                assert np.max(np.abs(np.abs(a.conj().T @ b) ** 2 - 0.25)) < 1e-10
        assert family.max_unbiasedness_deviation() < 1e-10

    def test_eigenbasis_sign_order(self):
        basis = common_eigenbasis(MeasurementSetting.of(["ZI", "IZ"]))
        assert basis.labels == ("++", "+-", "-+", "--")
        assert np.allclose(np.abs(basis.matrix()), np.eye(4))

    def test_eigenvectors_have_matching_signs(self):
        setting = MeasurementSetting.of(["XY", "YZ"])
        for sector in common_eigenbasis(setting).sectors:
            for vec in sector.vectors:
                for sign, g in zip(sector.signs, setting.generators):
                    assert np.allclose(pauli_matrix(g) @ vec.amplitudes, sign * vec.amplitudes)

    def test_partial_setting_sectors(self):
        basis = common_eigenbasis(MeasurementSetting.of(["ZZ"]))
        assert [s.rank for s in basis.sectors] == [2, 2]

    def test_three_qubit_family(self):
        assert len(mub_family(pauli_partition(3))) == 9

    def test_partial_setting_rejected(self):
        with pytest.raises(InvalidArgumentError):
            mub_family([MeasurementSetting.of(["ZZ"])])

    def test_biased_bases_rejected(self):
        family = two_qubit_mub()
        with pytest.raises(ValidationError):
            MubFamily(bases=(family.bases[0], family.bases[0]), settings=family.settings[:2])

    def test_too_many_bases_rejected(self):
        eye = np.eye(2, dtype=complex)
        setting = MeasurementSetting.of(["Z"])
        with pytest.raises(ValidationError):
            MubFamily(bases=(eye,) * 4, settings=(setting,) * 4)
