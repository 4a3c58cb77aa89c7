"""Unit tests for the circuit IR, the gate kernel and its dense reference."""

import math

import numpy as np
import pytest

from src.errors import DimensionError, ValidationError
from src.hamsim.pauli import PauliString
from src.sim.circuit import (
    Circuit,
    CircuitOp,
    apply_circuit,
    apply_gate,
    circuit_unitary,
    embed_unitary,
    hadamard_layer,
    inverse,
    random_circuit,
)
from src.sim.gates import catalog, controlled, hadamard, identity, named_gate, pauli, rotation
from src.sim.linalg import PAULI_MATRICES, Tolerance, herm_exp, kron, matrices_close
from src.sim.state import StateVector, basis_state, random_state

SQRT_HALF = 1 / math.sqrt(2)


@pytest.fixture
def rng():
    return np.random.default_rng(99)


class TestCircuitOp:
    def test_arity_checked(self):
        with pytest.raises(ValidationError):
            CircuitOp(hadamard(), (0, 1))

    def test_duplicate_targets(self):
        with pytest.raises(ValidationError):
            CircuitOp(named_gate("cnot"), (1, 1))

    def test_negative_target(self):
        with pytest.raises(ValidationError):
            CircuitOp(hadamard(), (-1,))

    def test_range_checked_on_add(self):
        with pytest.raises(ValidationError):
            Circuit(2).add(hadamard(), 2)

    def test_range_checked_on_construction(self):
        with pytest.raises(ValidationError):
            Circuit(1, [CircuitOp(hadamard(), (3,))])


class TestCircuit:
    def test_chaining_and_len(self):
        circuit = Circuit(2).add(hadamard(), 0).add(named_gate("cnot"), 0, 1)
        assert len(circuit) == 2

    def test_extend_with_offset(self):
        inner = Circuit(1).add(pauli("X"), 0)
        outer = Circuit(3).extend(inner, offset=2)
        assert outer.ops[0].targets == (2,)

    def test_hadamard_layer(self):
        layer = hadamard_layer(3, [0, 2])
        assert [op.targets for op in layer.ops] == [(0,), (2,)]

    def test_zero_qubits_rejected(self):
        with pytest.raises(ValidationError):
            Circuit(0)


class TestApplyGate:
    def test_hadamard_on_top_wire(self):
        out = apply_gate(basis_state(2, 0), CircuitOp(hadamard(), (0,)))
        assert np.allclose(out.amplitudes, [SQRT_HALF, 0, SQRT_HALF, 0])

    def test_identity_leaves_state(self, rng):
        state = random_state(3, rng)
        out = apply_gate(state, CircuitOp(identity(), (1,)))
        assert np.allclose(out.amplitudes, state.amplitudes)

    def test_cnot_makes_bell_pair(self):
        superposed = StateVector(2, [SQRT_HALF, 0, SQRT_HALF, 0])
        out = apply_gate(superposed, CircuitOp(named_gate("cnot"), (0, 1)))
        assert np.allclose(out.amplitudes, [SQRT_HALF, 0, 0, SQRT_HALF])

    def test_input_not_mutated(self):
        state = basis_state(1, 0)
        apply_gate(state, CircuitOp(pauli("X"), (0,)))
        assert np.array_equal(state.amplitudes, [1, 0])

    def test_out_of_range(self):
        with pytest.raises(ValidationError):
            apply_gate(basis_state(1, 0), CircuitOp(hadamard(), (1,)))

    def test_reversed_control(self):
        out = apply_gate(basis_state(2, 0b01), CircuitOp(named_gate("cnot"), (1, 0)))
        assert np.array_equal(out.amplitudes, basis_state(2, 0b11).amplitudes)

    def test_matches_dense_reference_for_catalog(self, rng):
        for gate in catalog():
            n = gate.arity + 2
            targets = tuple(int(q) for q in rng.permutation(n)[: gate.arity])
            op = CircuitOp(gate, targets)
            state = random_state(n, rng)
            expected = embed_unitary(op, n) @ state.amplitudes
            assert np.max(np.abs(apply_gate(state, op).amplitudes - expected)) <= 1e-12, gate.name

    def test_contraction_path_matches_gather_path(self, rng):
        # 15 qubits is past the cached-table limit
        n = 15
        state = random_state(n, rng)
        gate = controlled(rotation("Y", 0.7))
        op = CircuitOp(gate, (11, 3))
        fast = apply_gate(state, op).amplitudes
        reference = state.amplitudes.reshape([2] * n)
        # apply the 4x4 block to the two target axes by hand
        moved = np.moveaxis(reference, (11, 3), (0, 1)).reshape(4, -1)
        expected = np.moveaxis((gate.matrix @ moved).reshape([2, 2] + [2] * (n - 2)), (0, 1), (11, 3))
        assert np.max(np.abs(fast - expected.reshape(-1))) <= 1e-12


class TestEmbedUnitary:
    def test_single_wire(self):
        assert np.array_equal(embed_unitary(CircuitOp(pauli("X"), (0,)), 1), PAULI_MATRICES["X"])

    def test_lower_wire(self):
        embedded = embed_unitary(CircuitOp(pauli("X"), (1,)), 2)
        assert np.array_equal(embedded, kron(np.eye(2), PAULI_MATRICES["X"]))

    def test_cnot(self):
        embedded = embed_unitary(CircuitOp(named_gate("cnot"), (0, 1)), 2)
        assert np.array_equal(embedded, named_gate("cnot").matrix)

    def test_size_guard(self):
        with pytest.raises(DimensionError):
            embed_unitary(CircuitOp(hadamard(), (0,)), 13)


class TestCircuitUnitary:
    def test_empty_is_identity(self):
        assert np.array_equal(circuit_unitary(Circuit(2)), np.eye(4))

    def test_later_ops_on_the_left(self):
        circuit = Circuit(1).add(hadamard(), 0).add(pauli("Z"), 0)
        expected = PAULI_MATRICES["Z"] @ hadamard().matrix
        assert matrices_close(circuit_unitary(circuit), expected)

    def test_inverse_undoes_circuit(self, rng):
        circuit = random_circuit(4, 30, rng, catalog())
        state = random_state(4, rng)
        back = apply_circuit(apply_circuit(state, circuit), inverse(circuit))
        assert np.max(np.abs(back.amplitudes - state.amplitudes)) <= 1e-9

    def test_apply_circuit_size_mismatch(self):
        with pytest.raises(ValidationError):
            apply_circuit(basis_state(2, 0), Circuit(3))

    def test_norm_preserved(self, rng):
        circuit = random_circuit(5, 40, rng, catalog())
        out = apply_circuit(random_state(5, rng), circuit)
        assert out.norm() == pytest.approx(1.0, abs=1e-9)


class TestFanOut:
    """A direct CNOT fan-out equals the reversed-then-forward CNOT chain."""

    @pytest.mark.parametrize("targets", [3, 4])
    def test_cascades_agree(self, targets):
        n = targets + 1
        cnot = named_gate("cnot")
        direct = Circuit(n)
        for q in range(1, n):
            direct.add(cnot, 0, q)
        chained = Circuit(n)
        for q in range(n - 2, 0, -1):
            chained.add(cnot, q, q + 1)
        for q in range(n - 1):
            chained.add(cnot, q, q + 1)
        assert matrices_close(circuit_unitary(direct), circuit_unitary(chained), Tolerance(1e-12))


class TestParityLadder:
    def test_controlled_z_string_matches_exponential(self):
        theta = 0.9
        cnot = named_gate("cnot")
        circuit = Circuit(3).add(cnot, 0, 1).add(cnot, 1, 2).add(rotation("Z", theta), 2)
        circuit.add(cnot, 1, 2).add(cnot, 0, 1)
        expected = herm_exp(PauliString("ZZZ").matrix(), theta / 2)
        assert matrices_close(circuit_unitary(circuit), expected, Tolerance(1e-10))
