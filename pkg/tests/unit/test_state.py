"""Unit tests for state vectors, basis labels and the Bloch parametrization."""

import math

import numpy as np
import pytest

from src.errors import ValidationError
from src.sim.state import (
    BasisLabel,
    BlochAngles,
    StateVector,
    basis_state,
    binary_to_decimal,
    bits_to_string,
    bloch_vector,
    decimal_to_binary,
    fidelity_mod_phase,
    from_bloch,
    ghz_state,
    inner_product,
    is_product_bipartition,
    is_product_split,
    minus_state,
    plus_state,
    random_state,
    tensor,
    to_bloch,
)

SQRT_HALF = 1 / math.sqrt(2)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


class TestStateVector:
    def test_amplitude_count_checked(self):
        with pytest.raises(ValidationError):
            StateVector(2, [1, 0, 0])

    def test_zero_qubits_rejected(self):
        with pytest.raises(ValidationError):
            StateVector(0, [1])

    def test_non_finite_rejected(self):
        with pytest.raises(ValidationError):
            StateVector(1, [float("inf"), 0])

    def test_amplitudes_read_only(self):
        state = basis_state(1, 0)
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0

    def test_unnormalized_accepted_until_validated(self):
        state = StateVector(1, [1, 1])
        assert not state.is_normalized()
        with pytest.raises(ValidationError):
            state.validate()
        assert state.normalized().is_normalized()

    def test_normalize_zero_vector(self):
        with pytest.raises(ValidationError):
            StateVector(1, [0, 0]).normalized()

    def test_from_amplitudes_infers_width(self):
        state = StateVector.from_amplitudes([0.5, 0.5, 0.5, 0.5])
        assert state.num_qubits == 2
        assert len(state) == 4

    def test_from_amplitudes_rejects_odd_length(self):
        with pytest.raises(ValidationError):
            StateVector.from_amplitudes([1, 0, 0])


class TestBasisLabels:
    def test_worked_example(self):
        assert binary_to_decimal([1, 0, 0, 1, 1, 1]) == 39
        assert binary_to_decimal("100111") == 39

    def test_zero(self):
        assert binary_to_decimal([0, 0, 0]) == 0

    def test_decimal_to_binary(self):
        assert decimal_to_binary(56, 6) == [1, 1, 1, 0, 0, 0]
        assert decimal_to_binary(83, 7) == [1, 0, 1, 0, 0, 1, 1]

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            decimal_to_binary(8, 3)
        with pytest.raises(ValidationError):
            decimal_to_binary(-1, 3)

    def test_not_a_bit(self):
        with pytest.raises(ValidationError):
            binary_to_decimal([0, 2])

    def test_round_trip_sixteen_bits(self):
        for x in (0, 1, 255, 4096, 65535):
            assert binary_to_decimal(decimal_to_binary(x, 16)) == x

    def test_basis_label(self):
        label = BasisLabel.from_decimal(5, 3)
        assert label.bits == (1, 0, 1)
        assert str(label) == "101"
        assert BasisLabel.from_bits([1, 0, 1]) == label

    def test_bits_to_string(self):
        assert bits_to_string([0, 1, 1]) == "011"


class TestBasisState:
    def test_single_qubit_zero(self):
        assert np.array_equal(basis_state(1, 0).amplitudes, [1, 0])

    def test_ket_01(self):
        assert np.array_equal(basis_state(2, 1).amplitudes, [0, 1, 0, 0])

    def test_all_ones_label(self):
        amps = basis_state(3, 7).amplitudes
        assert amps[-1] == 1 and np.count_nonzero(amps) == 1

    def test_label_out_of_range(self):
        with pytest.raises(ValidationError):
            basis_state(2, 4)


class TestBloch:
    def test_north_pole(self):
        assert np.allclose(from_bloch(BlochAngles(0, 0)).amplitudes, [1, 0])

    def test_plus(self):
        assert np.allclose(from_bloch(BlochAngles(math.pi / 2, 0)).amplitudes, plus_state().amplitudes)

    def test_minus(self):
        assert np.allclose(from_bloch(BlochAngles(math.pi / 2, math.pi)).amplitudes, minus_state().amplitudes)

    def test_angle_ranges(self):
        with pytest.raises(ValidationError):
            BlochAngles(4.0, 0.0)
        with pytest.raises(ValidationError):
            BlochAngles(1.0, 2 * math.pi)

    def test_round_trip_grid(self):
        for theta in np.linspace(0.1, math.pi - 0.1, 9):
            for phi in np.linspace(0.0, 2 * math.pi, 12, endpoint=False):
                angles = to_bloch(from_bloch(BlochAngles(theta, phi)))
                assert angles.theta == pytest.approx(theta, abs=1e-9)
                assert angles.phi == pytest.approx(phi, abs=1e-9)

    def test_global_phase_stripped(self):
        state = from_bloch(BlochAngles(1.0, 2.0))
        rotated = StateVector(1, state.amplitudes * np.exp(0.77j))
        angles = to_bloch(rotated)
        assert angles.theta == pytest.approx(1.0)
        assert angles.phi == pytest.approx(2.0)

    def test_poles_report_zero_phi(self):
        assert to_bloch(basis_state(1, 1)) == BlochAngles(math.pi, 0.0)
        assert to_bloch(StateVector(1, [1j, 0])) == BlochAngles(0.0, 0.0)

    def test_rejects_two_qubits(self):
        with pytest.raises(ValidationError):
            to_bloch(basis_state(2, 0))

    def test_bloch_vector_axes(self):
        assert bloch_vector(plus_state()) == pytest.approx((1.0, 0.0, 0.0))
        assert bloch_vector(basis_state(1, 1)) == pytest.approx((0.0, 0.0, -1.0))
        y_plus = from_bloch(BlochAngles(math.pi / 2, math.pi / 2))
        assert bloch_vector(y_plus) == pytest.approx((0.0, 1.0, 0.0), abs=1e-12)


class TestTensorAndInnerProduct:
    def test_basis_tensor(self):
        assert np.array_equal(tensor(basis_state(1, 0), basis_state(1, 0)).amplitudes, [1, 0, 0, 0])

    def test_plus_zero(self):
        amps = tensor(plus_state(), basis_state(1, 0)).amplitudes
        assert np.allclose(amps, [SQRT_HALF, 0, SQRT_HALF, 0])

    def test_general_product(self, rng):
        a, b = random_state(1, rng), random_state(1, rng)
        amps = tensor(a, b).amplitudes
        for i in range(2):
            for j in range(2):
                assert amps[2 * i + j] == pytest.approx(a.amplitudes[i] * b.amplitudes[j])

    def test_orthogonal_basis(self):
        assert inner_product(basis_state(1, 0), basis_state(1, 1)) == 0

    def test_plus_zero_overlap(self):
        assert inner_product(plus_state(), basis_state(1, 0)) == pytest.approx(SQRT_HALF)

    def test_conjugate_linear_in_first_argument(self):
        a = StateVector(1, [1j, 0])
        assert inner_product(a, basis_state(1, 0)) == pytest.approx(-1j)

    def test_self_overlap(self, rng):
        state = random_state(3, rng)
        assert inner_product(state, state) == pytest.approx(1.0)

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            inner_product(basis_state(1, 0), basis_state(2, 0))


class TestFidelity:
    def test_global_phase(self):
        assert fidelity_mod_phase(basis_state(1, 0), StateVector(1, [-1, 0])) == pytest.approx(1.0)

    def test_orthogonal(self):
        assert fidelity_mod_phase(basis_state(1, 0), basis_state(1, 1)) == 0.0

    def test_plus_zero(self):
        assert fidelity_mod_phase(plus_state(), basis_state(1, 0)) == pytest.approx(SQRT_HALF)


class TestEntanglement:
    def test_bell_pair_entangled(self):
        bell = StateVector(2, [SQRT_HALF, 0, 0, SQRT_HALF])
        assert not is_product_bipartition(bell)

    def test_basis_product(self):
        assert is_product_bipartition(basis_state(2, 0))

    def test_random_products(self, rng):
        for _ in range(1000):
            assert is_product_bipartition(tensor(random_state(1, rng), random_state(1, rng)))

    def test_bipartition_needs_two_qubits(self):
        with pytest.raises(ValidationError):
            is_product_bipartition(basis_state(3, 0))

    def test_ghz_every_cut_entangled(self):
        ghz = ghz_state(3)
        assert all(not is_product_split(ghz, q) for q in range(3))

    def test_product_split(self, rng):
        state = tensor(random_state(1, rng), random_state(2, rng))
        assert is_product_split(state, 0)
