"""Exact and first-order Trotterized time evolution.

Each Pauli-string exponential ``exp(-i t P)`` is compiled as: rotate every
X wire with H and every Y wire with R_x(pi/2), chain the parities into the
last non-identity wire with CNOTs, apply R_z(2t) there, then undo the chain
and the basis changes.
"""

import logging
import math
from typing import Sequence

import numpy as np

from ..errors import ValidationError
from ..sim.circuit import Circuit, apply_circuit, circuit_unitary
from ..sim.gates import hadamard, named_gate, rotation
from ..sim.linalg import herm_exp
from ..sim.state import StateVector
from .pauli import PauliString, PauliSumHamiltonian

logger = logging.getLogger(__name__)

DEFAULT_ERROR_SAMPLES = 200
# below this the product formula is exact up to rounding
ERROR_FLOOR = 1e-13


def _check_state(h: PauliSumHamiltonian, state: StateVector) -> None:
    if state.num_qubits != h.n:
        raise ValidationError(f"Hamiltonian acts on {h.n} qubits, state has {state.num_qubits}")


def exact_evolution(h: PauliSumHamiltonian, t: float, state: StateVector) -> StateVector:
    """``exp(-i H t)|state>`` from the dense eigendecomposition."""
    _check_state(h, state)
    return StateVector(h.n, herm_exp(h.matrix(), t) @ state.amplitudes)


def _basis_change(letter: str, undo: bool):
    if letter == "X":
        return hadamard()
    # R_x(pi/2) maps the Y eigenbasis onto the Z eigenbasis
    return rotation("X", -math.pi / 2 if undo else math.pi / 2)


def string_exp_circuit(p: PauliString, t: float) -> Circuit:
    """Circuit whose unitary is ``exp(-i t P)``.

    Raises:
        ValidationError: If ``p`` is all identity (the evolution is a global phase).
    """
    wires = p.support()
    if not wires:
        raise ValidationError(f"Pauli string {p} is the identity; its evolution is a global phase")
    circuit = Circuit(p.n)
    for q in wires:
        if p.letters[q] != "Z":
            circuit.add(_basis_change(p.letters[q], undo=False), q)
    cnot = named_gate("cnot")
    ladder = list(zip(wires, wires[1:]))
    for control, target in ladder:
        circuit.add(cnot, control, target)
    circuit.add(rotation("Z", 2 * t), wires[-1])
    for control, target in reversed(ladder):
        circuit.add(cnot, control, target)
    for q in wires:
        if p.letters[q] != "Z":
            circuit.add(_basis_change(p.letters[q], undo=True), q)
    return circuit


def trotter_step_circuit(h: PauliSumHamiltonian, dt: float) -> tuple[Circuit, float]:
    """One product-formula step in term order.

    Returns:
        (circuit over the non-identity terms, phase angle of the identity terms).
    """
    circuit = Circuit(h.n)
    identity_angle = 0.0
    for coefficient, string in h.terms:
        if string.is_identity():
            identity_angle += coefficient * dt
            continue
        circuit.extend(string_exp_circuit(string, coefficient * dt))
    return circuit, identity_angle


def trotter_evolve(h: PauliSumHamiltonian, t: float, steps: int, state: StateVector) -> StateVector:
    """Apply the first-order product formula ``steps`` times."""
    _check_state(h, state)
    if steps < 1:
        raise ValidationError(f"Trotter steps must be >= 1, got {steps}")
    step, identity_angle = trotter_step_circuit(h, t / steps)
    current = state
    for _ in range(steps):
        current = apply_circuit(current, step)
    phase = np.exp(-1j * identity_angle * steps)
    logger.debug(f"Trotter evolution: {steps} steps of {len(step)} ops")
    return StateVector(h.n, current.amplitudes * phase)


def trotter_unitary(h: PauliSumHamiltonian, t: float, steps: int) -> np.ndarray:
    """Dense product-formula unitary, equal to what :func:`trotter_evolve` applies."""
    if steps < 1:
        raise ValidationError(f"Trotter steps must be >= 1, got {steps}")
    step, identity_angle = trotter_step_circuit(h, t / steps)
    step_matrix = circuit_unitary(step) * np.exp(-1j * identity_angle)
    return np.linalg.matrix_power(step_matrix, steps)


def trotter_error(
    h: PauliSumHamiltonian,
    t: float,
    steps: int,
    samples: int = DEFAULT_ERROR_SAMPLES,
    seed: int = 0,
) -> float:
    """Largest 2-norm distance between Trotterized and exact evolution over random unit states."""
    exact = herm_exp(h.matrix(), t)
    approx = trotter_unitary(h, t, steps)
    generator = np.random.default_rng(seed)
    dim = 2**h.n
    states = generator.normal(size=(dim, samples)) + 1j * generator.normal(size=(dim, samples))
    states /= np.linalg.norm(states, axis=0)
    return float(np.max(np.linalg.norm((approx - exact) @ states, axis=0)))


def trotter_slope(
    h: PauliSumHamiltonian, t: float, steps: Sequence[int], samples: int = DEFAULT_ERROR_SAMPLES
) -> float:
    """Least-squares slope of ``log(error)`` against ``log(steps)``.

    Raises:
        ValidationError: If fewer than two step counts are given or an error vanishes.
    """
    if len(steps) < 2:
        raise ValidationError("A slope needs at least two step counts")
    errors = [trotter_error(h, t, n, samples) for n in steps]
    if min(errors) <= ERROR_FLOOR:
        raise ValidationError("Trotter error vanished; the terms commute")
    slope = float(np.polyfit(np.log(steps), np.log(errors), 1)[0])
    logger.info(f"Trotter error slope {slope:.4f} over steps {list(steps)}")
    return slope
