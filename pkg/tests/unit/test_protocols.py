"""Unit tests for Bell states, superdense coding and teleportation."""

import math

import numpy as np
import pytest

from src.algorithms.protocols import (
    BellLabel,
    bell_basis,
    bell_circuit,
    bell_state,
    superdense,
    superdense_state,
    teleport,
    teleport_branches,
)
from src.errors import ValidationError
from src.sim.rng import CounterRng
from src.sim.state import StateVector, basis_state, fidelity_mod_phase, inner_product, plus_state

SQRT_HALF = 1 / math.sqrt(2)


class TestBellStates:
    def test_beta_00(self):
        assert np.allclose(bell_state(BellLabel(0, 0)).amplitudes, [SQRT_HALF, 0, 0, SQRT_HALF])

    def test_beta_01(self):
        assert np.allclose(bell_state(BellLabel(0, 1)).amplitudes, [0, SQRT_HALF, SQRT_HALF, 0])

    def test_general_formula(self):
        for i in (0, 1):
            for j in (0, 1):
                expected = np.zeros(4)
                expected[j] = SQRT_HALF
                expected[2 + (1 - j)] = (-1) ** i * SQRT_HALF
                assert np.allclose(bell_state(BellLabel(i, j)).amplitudes, expected)

    def test_gram_matrix_is_identity(self):
        basis = bell_basis()
        gram = np.array([[inner_product(a, b) for b in basis] for a in basis])
        assert np.max(np.abs(gram - np.eye(4))) <= 1e-12

    def test_circuit_length(self):
        assert len(bell_circuit(BellLabel(1, 1))) == 4
        assert len(bell_circuit(BellLabel(0, 0))) == 2

    def test_label_bits_checked(self):
        with pytest.raises(ValidationError):
            BellLabel(2, 0)


class TestSuperdense:
    @pytest.mark.parametrize("bits", [(0, 0), (0, 1), (1, 0), (1, 1)])
    def test_round_trip(self, bits):
        assert superdense(*bits) == bits

    def test_received_register_is_basis_state_up_to_phase(self):
        for b1 in (0, 1):
            for b2 in (0, 1):
                received = superdense_state(b1, b2)
                assert fidelity_mod_phase(received, basis_state(2, 2 * b1 + b2)) == pytest.approx(1.0)

    def test_rejects_non_bits(self):
        with pytest.raises(ValidationError):
            superdense(2, 0)


class TestTeleport:
    def test_zero(self):
        received, _ = teleport(basis_state(1, 0), CounterRng(1))
        assert fidelity_mod_phase(received, basis_state(1, 0)) == pytest.approx(1.0, abs=1e-9)

    def test_plus_every_branch(self):
        branches = teleport_branches(plus_state())
        assert sorted(b.bits for b in branches) == [(0, 0), (0, 1), (1, 0), (1, 1)]
        for branch in branches:
            assert branch.probability == pytest.approx(0.25)
            assert fidelity_mod_phase(branch.received, plus_state()) == pytest.approx(1.0, abs=1e-9)

    def test_seeded_runs_repeat(self):
        q = StateVector(1, [0.6, 0.8j])
        first = teleport(q, CounterRng(77))
        second = teleport(q, CounterRng(77))
        assert first[1] == second[1]
        assert np.array_equal(first[0].amplitudes, second[0].amplitudes)

    def test_received_equals_input_exactly(self):
        q = StateVector(1, [0.6, 0.8j])
        for branch in teleport_branches(q):
            assert np.max(np.abs(branch.received.amplitudes - q.amplitudes)) <= 1e-12

    def test_rejects_two_qubits(self):
        with pytest.raises(ValidationError):
            teleport(basis_state(2, 0), CounterRng(0))

    def test_rejects_unnormalized(self):
        with pytest.raises(ValidationError):
            teleport(StateVector(1, [1, 1]), CounterRng(0))
