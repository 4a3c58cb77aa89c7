"""Three-qubit bit-flip code.

The logical qubit ``a|000> + b|111>`` lives on wires 0-2. Syndrome extraction
adds two ancillas prepared in ``|0>`` on wires 3 and 4, so an error-free
codeword reads syndrome ``(0, 0)``.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import ValidationError
from ..sim.circuit import Circuit, CircuitOp, apply_circuit, embed_unitary
from ..sim.gates import named_gate, pauli
from ..sim.linalg import DenseMatrix
from ..sim.measure import collapse, joint_distribution
from ..sim.state import StateVector, basis_state, fidelity_mod_phase, tensor
from .channels import KrausChannel, apply_channels, bit_flip_channel, embed_channel, to_density

logger = logging.getLogger(__name__)

DATA_WIRES = (0, 1, 2)
ANCILLA_WIRES = (3, 4)
SUBSPACE_EPS = 1e-9


@dataclass(frozen=True)
class Syndrome:
    s1: int
    s2: int

    def __post_init__(self):
        if self.s1 not in (0, 1) or self.s2 not in (0, 1):
            raise ValidationError(f"Syndrome bits must be 0/1, got ({self.s1}, {self.s2})")

    def __str__(self) -> str:
        return f"{self.s1}{self.s2}"


# syndrome -> wire to flip back
CORRECTIONS: dict[Syndrome, Optional[int]] = {
    Syndrome(0, 0): None,
    Syndrome(1, 0): 0,
    Syndrome(1, 1): 1,
    Syndrome(0, 1): 2,
}


@dataclass(frozen=True)
class CodeSubspace:
    """Image of the code space under a single flip (``flip=None`` for no error)."""

    flip: Optional[int]
    labels: tuple[int, int]

    def projector(self) -> DenseMatrix:
        matrix = np.zeros((8, 8), dtype=complex)
        for label in self.labels:
            matrix[label, label] = 1
        return matrix


@dataclass(frozen=True)
class BitflipRun:
    """Outcome of one encode/flip/extract/correct/decode pass."""

    flips: tuple[int, ...]
    syndrome: Syndrome
    recovered: StateVector
    fidelity: float


def code_subspaces() -> list[CodeSubspace]:
    """The four pairwise-orthogonal subspaces the syndrome distinguishes."""
    subspaces = [CodeSubspace(None, (0b000, 0b111))]
    for k in DATA_WIRES:
        mask = 1 << (2 - k)
        subspaces.append(CodeSubspace(k, (0b000 ^ mask, 0b111 ^ mask)))
    return subspaces


def _check_data(state3: StateVector) -> None:
    if state3.num_qubits != 3:
        raise ValidationError(f"The bit-flip code uses 3 data qubits, got {state3.num_qubits}")
    state3.validate()


def encode_bitflip(q: StateVector) -> StateVector:
    """``a|0> + b|1>`` to ``a|000> + b|111>`` with two CNOTs from wire 0."""
    if q.num_qubits != 1:
        raise ValidationError("Only single-qubit states can be encoded")
    q.validate()
    cnot = named_gate("cnot")
    circuit = Circuit(3).add(cnot, 0, 1).add(cnot, 0, 2)
    return apply_circuit(tensor(q, basis_state(2, 0)), circuit)


def apply_flip(state3: StateVector, k: Optional[int]) -> StateVector:
    """X on data wire ``k``; ``None`` leaves the state alone."""
    if state3.num_qubits != 3:
        raise ValidationError(f"The bit-flip code uses 3 data qubits, got {state3.num_qubits}")
    if k is None:
        return state3
    if k not in DATA_WIRES:
        raise ValidationError(f"Flip wire must be 0, 1, 2 or None, got {k!r}")
    return apply_circuit(state3, Circuit(3).add(pauli("X"), k))


def _locate_subspace(state3: StateVector) -> CodeSubspace:
    weights = np.abs(state3.amplitudes) ** 2
    for subspace in code_subspaces():
        if float(sum(weights[label] for label in subspace.labels)) >= 1 - SUBSPACE_EPS:
            return subspace
    raise ValidationError("State is not a codeword with at most one bit flip")


def syndrome_extract(state3: StateVector) -> tuple[Syndrome, StateVector]:
    """Measure the two parities into fresh ancillas.

    Returns:
        (syndrome, data register after the measurement).

    Raises:
        ValidationError: If the input is not a code state with at most one flip.
    """
    _check_data(state3)
    _locate_subspace(state3)
    cnot = named_gate("cnot")
    circuit = Circuit(5)
    for data, ancilla in ((0, 3), (1, 3), (1, 4), (2, 4)):
        circuit.add(cnot, data, ancilla)
    extended = apply_circuit(tensor(state3, basis_state(2, 0)), circuit)
    distribution = joint_distribution(extended, ANCILLA_WIRES)
    outcome = int(np.argmax(distribution))
    if distribution[outcome] < 1 - SUBSPACE_EPS:
        raise ValidationError(f"Syndrome is not deterministic: {distribution.tolist()}")
    syndrome = Syndrome(outcome >> 1, outcome & 1)
    post_state, _ = collapse(extended, ANCILLA_WIRES, (syndrome.s1, syndrome.s2))
    data = post_state.amplitudes[[(x << 2) | outcome for x in range(8)]]
    logger.debug(f"Syndrome {syndrome}")
    return syndrome, StateVector(3, data)


def correct(state3: StateVector, syndrome: Syndrome) -> StateVector:
    return apply_flip(state3, CORRECTIONS[syndrome])


def decode(state3: StateVector) -> StateVector:
    """Undo the encoder and drop wires 1-2.

    Raises:
        ValidationError: If wires 1-2 are not ``|00>`` afterwards.
    """
    _check_data(state3)
    cnot = named_gate("cnot")
    decoded = apply_circuit(state3, Circuit(3).add(cnot, 0, 1).add(cnot, 0, 2))
    if joint_distribution(decoded, (1, 2))[0] < 1 - SUBSPACE_EPS:
        raise ValidationError("Ancilla wires are not |00> after decoding; correct the state first")
    return StateVector(1, decoded.amplitudes[[0b000, 0b100]])


def run_bitflip_pipeline(q: StateVector, flips: Sequence[int] = ()) -> BitflipRun:
    """Encode ``q``, flip the listed wires, then extract, correct and decode."""
    state = encode_bitflip(q)
    for k in flips:
        state = apply_flip(state, k)
    syndrome, measured = syndrome_extract(state)
    recovered = decode(correct(measured, syndrome))
    return BitflipRun(tuple(flips), syndrome, recovered, fidelity_mod_phase(recovered, q))


def recovery_channel() -> KrausChannel:
    """Measure the syndrome and flip back: Kraus operators ``X_k P_s``."""
    operators = []
    for subspace in code_subspaces():
        flip = np.eye(8, dtype=complex)
        if subspace.flip is not None:
            flip = embed_unitary(CircuitOp(pauli("X"), (subspace.flip,)), 3)
        operators.append((flip @ subspace.projector(), 1.0))
    return KrausChannel(tuple(operators), "bitflip_recovery")


def bitflip_logical_error(p: float) -> float:
    """Probability that independent bit flips on every wire corrupt logical ``|0>``.

    Evaluated on the density matrix; equals ``3 p**2 - 2 p**3``.
    """
    rho = to_density(encode_bitflip(basis_state(1, 0)))
    noise = [embed_channel(bit_flip_channel(p), k, 3) for k in DATA_WIRES]
    rho = apply_channels(rho, [*noise, recovery_channel()])
    return rho.probability(0b111)
