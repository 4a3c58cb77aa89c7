"""Bell states, superdense coding and teleportation."""

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError
from ..sim.circuit import Circuit, apply_circuit
from ..sim.gates import hadamard, named_gate, pauli
from ..sim.measure import collapse, measure_subset, probabilities
from ..sim.rng import CounterRng
from ..sim.state import StateVector, basis_state, fidelity_mod_phase, tensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BellLabel:
    """Input bits ``|i>|j>`` fed to the Bell circuit."""

    i: int
    j: int

    def __post_init__(self):
        if self.i not in (0, 1) or self.j not in (0, 1):
            raise ValidationError(f"Bell label bits must be 0/1, got ({self.i}, {self.j})")


@dataclass(frozen=True)
class TeleportBranch:
    """One measurement branch of the teleportation protocol."""

    bits: tuple[int, int]
    probability: float
    received: StateVector


def bell_circuit(label: BellLabel) -> Circuit:
    """Prepare ``|i j>`` from ``|00>``, then H on wire 0 and CNOT(0 -> 1)."""
    circuit = Circuit(2)
    x = pauli("X")
    if label.i:
        circuit.add(x, 0)
    if label.j:
        circuit.add(x, 1)
    return circuit.add(hadamard(), 0).add(named_gate("cnot"), 0, 1)


def bell_state(label: BellLabel) -> StateVector:
    """``(|0 j> + (-1)^i |1 j'>) / sqrt(2)`` where j' is the complement of j."""
    return apply_circuit(basis_state(2, 0), bell_circuit(label))


def bell_basis() -> list[StateVector]:
    return [bell_state(BellLabel(i, j)) for i in (0, 1) for j in (0, 1)]


def superdense_state(b1: int, b2: int) -> StateVector:
    """Receiver's register after decoding, before measurement."""
    if b1 not in (0, 1) or b2 not in (0, 1):
        raise ValidationError(f"Superdense input must be two bits, got ({b1}, {b2})")
    circuit = Circuit(2)
    # sender owns wire 0 of the shared pair
    if b2:
        circuit.add(pauli("X"), 0)
    if b1:
        circuit.add(pauli("Z"), 0)
    circuit.add(named_gate("cnot"), 0, 1).add(hadamard(), 0)
    return apply_circuit(bell_state(BellLabel(0, 0)), circuit)


def superdense(b1: int, b2: int) -> tuple[int, int]:
    """Send two classical bits through one qubit of a shared Bell pair.

    Returns:
        The bits the receiver reads (the received register is a basis state up to phase).
    """
    received = superdense_state(b1, b2)
    label = int(np.argmax(probabilities(received)))
    recovered = (label >> 1, label & 1)
    if fidelity_mod_phase(received, basis_state(2, label)) < 1 - 1e-9:
        raise ValidationError("Decoded register is not a basis state")
    logger.debug(f"Superdense {b1}{b2} -> {recovered[0]}{recovered[1]}")
    return recovered


def _check_qubit(q: StateVector) -> None:
    if q.num_qubits != 1:
        raise ValidationError("Teleportation sends a single-qubit state")
    q.validate()


def _entangle_and_rotate(q: StateVector) -> StateVector:
    # wire 0 carries q, wires 1-2 share the Bell pair
    circuit = Circuit(3).add(named_gate("cnot"), 0, 1).add(hadamard(), 0)
    return apply_circuit(tensor(q, bell_state(BellLabel(0, 0))), circuit)


def _receive(post_state: StateVector, m1: int, m2: int) -> StateVector:
    fix = Circuit(3)
    if m2:
        fix.add(pauli("X"), 2)
    if m1:
        fix.add(pauli("Z"), 2)
    fixed = apply_circuit(post_state, fix)
    base = (m1 << 2) | (m2 << 1)
    return StateVector(1, fixed.amplitudes[[base, base | 1]])


def teleport(q: StateVector, rng: CounterRng) -> tuple[StateVector, tuple[int, int]]:
    """Teleport ``q`` from wire 0 to wire 2, sampling the two measurements.

    Returns:
        (received single-qubit state, (m1, m2)).
    """
    _check_qubit(q)
    outcome = measure_subset(_entangle_and_rotate(q), [0, 1], rng)
    m1, m2 = outcome.bits
    return _receive(outcome.post_state, m1, m2), (m1, m2)


def teleport_branches(q: StateVector) -> list[TeleportBranch]:
    """Every reachable measurement branch, each with its corrected output."""
    _check_qubit(q)
    state = _entangle_and_rotate(q)
    branches = []
    for m1 in (0, 1):
        for m2 in (0, 1):
            post_state, probability = collapse(state, [0, 1], [m1, m2])
            branches.append(TeleportBranch((m1, m2), probability, _receive(post_state, m1, m2)))
    return branches
