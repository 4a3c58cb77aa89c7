"""Hadamard test, phase estimation and the swap test.

All three read an ancilla-controlled interference pattern. Probabilities are
taken from the simulated state, never from closed-form expressions.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ValidationError
from ..sim.circuit import Circuit, CircuitOp, apply_circuit, apply_gate
from ..sim.gates import GateDef, controlled, hadamard, named_gate, s
from ..sim.measure import ShotConfig, marginal, sample
from ..sim.state import StateVector, basis_state, tensor
from .qft import iqft

logger = logging.getLogger(__name__)

EIGENSTATE_EPS = 1e-6


@dataclass(frozen=True)
class PhaseEstimate:
    """Estimated phase in ``[0, 2 pi)`` with the ancilla histogram it came from."""

    theta: float
    outcome: str
    histogram: dict[str, int]


def _check_target(u: GateDef, target: StateVector) -> None:
    if u.arity != target.num_qubits:
        raise ValidationError(
            f"Gate {u.name!r} acts on {u.arity} qubits but the target has {target.num_qubits}"
        )
    target.validate()


def hadamard_test(u: GateDef, target: StateVector, imaginary: bool = False) -> tuple[float, float]:
    """Control probabilities ``(P0, P1)`` of the Hadamard test.

    The real variant gives ``P0 = (1 + Re<Q|U|Q>) / 2``. The imaginary variant
    prepares the control as ``(|0> - i|1>)/sqrt(2)`` with S-dagger, which gives
    ``P0 = (1 + Im<Q|U|Q>) / 2``.
    """
    _check_target(u, target)
    k = u.arity
    circuit = Circuit(k + 1).add(hadamard(), 0)
    if imaginary:
        circuit.add(s().dagger(), 0)
    circuit.add(controlled(u), 0, *range(1, k + 1)).add(hadamard(), 0)
    final = apply_circuit(tensor(basis_state(1, 0), target), circuit)
    p0 = marginal(final, 0, 0)
    return p0, 1.0 - p0


def hadamard_expectation(u: GateDef, target: StateVector) -> complex:
    """``<Q|U|Q>`` assembled from the real and imaginary Hadamard tests."""
    p_real, _ = hadamard_test(u, target)
    p_imag, _ = hadamard_test(u, target, imaginary=True)
    return complex(2 * p_real - 1, 2 * p_imag - 1)


def eigenphase(u: GateDef, eigenstate: StateVector) -> float:
    """Phase ``theta`` with ``U|psi> = e^{i theta}|psi>``, in ``[0, 2 pi)``.

    Raises:
        ValidationError: If ``eigenstate`` is not an eigenvector of ``u`` within 1e-6.
    """
    _check_target(u, eigenstate)
    image = apply_gate(eigenstate, CircuitOp(u, tuple(range(u.arity)))).amplitudes
    eigenvalue = np.vdot(eigenstate.amplitudes, image)
    residual = float(np.linalg.norm(image - eigenvalue * eigenstate.amplitudes))
    if residual > EIGENSTATE_EPS or abs(abs(eigenvalue) - 1.0) > EIGENSTATE_EPS:
        raise ValidationError(f"State is not an eigenvector of {u.name!r} (residual {residual:.3g})")
    return float(np.angle(eigenvalue)) % (2 * math.pi)


def phase_estimation_circuit(u: GateDef, ancillas: int) -> Circuit:
    """Ancillas on wires ``0..m-1``, target on the wires after them.

    Ancilla j controls ``U**(2**(m-1-j))``; an inverse QFT on the ancillas follows.
    """
    if ancillas < 1:
        raise ValidationError(f"Phase estimation needs at least one ancilla, got {ancillas}")
    k = u.arity
    circuit = Circuit(ancillas + k)
    for j in range(ancillas):
        circuit.add(hadamard(), j)
    targets = range(ancillas, ancillas + k)
    for j in range(ancillas):
        circuit.add(controlled(u.power(2 ** (ancillas - 1 - j))), j, *targets)
    return circuit.extend(iqft(ancillas))


def phase_estimate_run(
    u: GateDef, eigenstate: StateVector, ancillas: int, config: ShotConfig
) -> PhaseEstimate:
    """Sample the ancilla register and turn the most frequent outcome into a phase."""
    exact = eigenphase(u, eigenstate)
    circuit = phase_estimation_circuit(u, ancillas)
    final = apply_circuit(tensor(basis_state(ancillas, 0), eigenstate), circuit)
    histogram = sample(final, range(ancillas), config)
    # keys are sorted, so max() keeps the smallest label among ties
    outcome = max(histogram, key=lambda key: histogram[key])
    theta = 2 * math.pi * int(outcome, 2) / 2**ancillas
    logger.info(f"Phase estimate {theta:.6f} from outcome {outcome} (exact {exact:.6f})")
    return PhaseEstimate(theta, outcome, histogram)


def phase_estimate(
    u: GateDef, eigenstate: StateVector, ancillas: int, shots: int = 1024, seed: int = 0
) -> float:
    """Estimated eigenphase; exact when ``theta / 2 pi`` has an m-bit binary expansion."""
    return phase_estimate_run(u, eigenstate, ancillas, ShotConfig(shots, seed)).theta


def swap_test(t1: StateVector, t2: StateVector) -> tuple[float, float]:
    """Control probabilities ``(P0, P1)``; ``P0 = (1 + |<t1|t2>|**2) / 2``."""
    if t1.num_qubits != t2.num_qubits:
        raise ValidationError(
            f"Swap test needs equal sizes, got {t1.num_qubits} and {t2.num_qubits}"
        )
    t1.validate()
    t2.validate()
    k = t1.num_qubits
    circuit = Circuit(2 * k + 1).add(hadamard(), 0)
    cswap = named_gate("cswap")
    for i in range(k):
        circuit.add(cswap, 0, 1 + i, 1 + k + i)
    circuit.add(hadamard(), 0)
    initial = tensor(basis_state(1, 0), tensor(t1, t2))
    p0 = marginal(apply_circuit(initial, circuit), 0, 0)
    return p0, 1.0 - p0
