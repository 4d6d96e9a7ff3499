"""Pauli 串与量子态测试用例"""

import numpy as np
import pytest
from pydantic import ValidationError

from qptlab.common.exceptions import DimensionMismatchError
from qptlab.core import (
    DensityMatrix,
    KetVector,
    PauliString,
    bell_state,
    commutes,
    ket_from_operator,
    maximally_entangled,
    multiply_ignoring_phase,
    pauli_basis,
    pauli_index,
    pauli_labels,
    pauli_matrix,
    product_ket,
    schmidt_rank,
    tensor_kets,
)

X = np.array([[0, 1], [1, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


@pytest.mark.unit
class TestPauliString:
    """Pauli 串构造与基顺序"""

    def test_labels_normalized_to_upper_case(self):
        assert PauliString("xz").labels == "XZ"

    @pytest.mark.parametrize("labels", ["", "AB", "XQ"])
    def test_invalid_labels_rejected(self, labels):
        with pytest.raises(ValidationError):
            PauliString(labels)

    def test_matrix_is_tensor_product(self):
        assert np.allclose(pauli_matrix("XZ"), np.kron(X, Z))

    @pytest.mark.parametrize("label", ["I", "X", "Y", "Z", "XY", "ZZI"])
    def test_matrix_hermitian_unitary(self, label):
        m = pauli_matrix(label)
        d = m.shape[0]
        assert np.allclose(m, m.conj().T)
        assert np.allclose(m @ m, np.eye(d))
        expected_trace = d if set(label) == {"I"} else 0
        assert abs(np.trace(m) - expected_trace) < 1e-12

    def test_lexicographic_index(self):
        """I < X < Y < Z, 最左比特为最高位"""
        assert pauli_labels(1) == ("I", "X", "Y", "Z")
        assert pauli_index("ZZ") == 15
        assert pauli_index("XY") == 6
        assert PauliString.from_index(6, 2).labels == "XY"
        assert pauli_basis(2).shape == (16, 4, 4)

    def test_symplectic_round_trip(self):
        for label in pauli_labels(3):
            p = PauliString(label)
            x, z = p.symplectic()
            assert PauliString.from_symplectic(x, z, 3).labels == label

    def test_product_ignoring_phase(self):
        assert multiply_ignoring_phase("XY", "YZ").labels == "ZX"
        assert multiply_ignoring_phase("XX", "XX").labels == "II"

    def test_embed(self):
        assert PauliString("ZZ").embed([0, 2], 4).labels == "ZIZI"


@pytest.mark.unit
class TestCommutes:
    """交换关系: 不同的非 I 位置数为偶数时对易"""

    @pytest.mark.parametrize("a,b,expected", [
        ("XX", "ZZ", True),
        ("XX", "YY", True),
        ("XI", "ZI", False),
        ("XY", "YX", True),
        ("XYZ", "ZZZ", False),
        ("II", "XY", True),
    ])
    def test_parity_rule(self, a, b, expected):
        assert commutes(a, b) is expected

    def test_matches_matrix_commutator(self):
        for a in pauli_labels(2):
            for b in pauli_labels(2):
                ma, mb = pauli_matrix(a), pauli_matrix(b)
                assert commutes(a, b) == np.allclose(ma @ mb, mb @ ma)

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            commutes("X", "XX")


@pytest.mark.unit
class TestStates:
    """纯态与密度矩阵的不变量"""

    def test_unnormalized_ket_rejected(self):
        with pytest.raises(ValidationError):
            KetVector([1, 1])

    def test_non_power_of_two_rejected(self):
        with pytest.raises(ValidationError):
            KetVector([1, 0, 0])

    def test_density_trace_above_one_rejected(self):
        with pytest.raises(ValidationError):
            DensityMatrix(np.eye(2))

    def test_density_negative_eigenvalue_rejected(self):
        with pytest.raises(ValidationError):
            DensityMatrix(np.diag([1.2, -0.2]))

    def test_density_non_hermitian_rejected(self):
        with pytest.raises(ValidationError):
            DensityMatrix(np.array([[0.5, 0.1], [0.0, 0.5]]))

    def test_subnormalized_density_allowed(self):
        rho = DensityMatrix(np.diag([0.3, 0.2]).astype(complex))
        assert rho.trace() == pytest.approx(0.5)

    def test_arrays_are_read_only(self):
        ket = product_ket(["0"])
        with pytest.raises(ValueError):
            ket.amplitudes[0] = 0

    def test_maximally_entangled_is_phi_plus(self):
        assert np.allclose(maximally_entangled(1).amplitudes, bell_state("phi+").amplitudes)

    def test_ket_from_operator(self):
        assert np.allclose(ket_from_operator(X).amplitudes, bell_state("psi+").amplitudes)

    def test_schmidt_rank(self):
        assert schmidt_rank(maximally_entangled(2), 2) == 4
        assert schmidt_rank(product_ket(["0", "+", "+i", "1"]), 2) == 1
        assert schmidt_rank(tensor_kets(bell_state("phi-"), product_ket(["0"])), 1) == 2

    def test_schmidt_rank_cut_out_of_range(self):
        with pytest.raises(DimensionMismatchError):
            schmidt_rank(maximally_entangled(1), 2)
