"""Order finding for N = 15 and the classical period check."""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import numpy.typing as npt

from ..errors import MethodFailureError, ValidationError
from ..sim.circuit import Circuit, apply_circuit, hadamard_layer
from ..sim.gates import GateDef
from ..sim.measure import collapse, measure_subset
from ..sim.rng import CounterRng
from ..sim.state import basis_state, decimal_to_binary
from .qft import iqft

logger = logging.getLogger(__name__)

MODULUS = 15
REGISTER_QUBITS = 4
UPPER = tuple(range(REGISTER_QUBITS))
LOWER = tuple(range(REGISTER_QUBITS, 2 * REGISTER_QUBITS))
SUPPORT_EPS = 1e-12


@dataclass(frozen=True)
class Shor15Result:
    """Upper-register readout after the inverse QFT and the classical post-processing."""

    a: int
    residue: int
    residue_probability: float
    upper_amplitudes: npt.NDArray[np.complex128] = field(repr=False)
    distribution: npt.NDArray[np.float64] = field(repr=False)
    period: int
    factors: tuple[int, int]

    def support(self) -> list[int]:
        return [y for y, p in enumerate(self.distribution) if p > SUPPORT_EPS]


def _check_coprime(a: int, n: int) -> None:
    if n < 2:
        raise ValidationError(f"Modulus must be >= 2, got {n}")
    if not 1 <= a < n or math.gcd(a, n) != 1:
        raise ValidationError(f"{a} is not a unit modulo {n}")


def multiplicative_order(a: int, n: int) -> int:
    """Smallest ``r >= 1`` with ``a**r == 1 (mod n)``."""
    _check_coprime(a, n)
    r, value = 1, a % n
    while value != 1:
        value = (value * a) % n
        r += 1
    return r


def period_classical(a: int, n: int) -> int:
    """Brute-force period of ``a`` modulo ``n``, usable for factoring.

    Raises:
        ValidationError: If ``gcd(a, n) != 1``.
        MethodFailureError: If the period is odd or ``a**(r/2) == -1 (mod n)``.
    """
    r = multiplicative_order(a, n)
    if r % 2:
        raise MethodFailureError(f"Period of {a} mod {n} is odd ({r})", period=r)
    if pow(a, r // 2, n) == n - 1:
        raise MethodFailureError(f"{a}^{r // 2} = -1 mod {n}; period {r} gives no factors", period=r)
    return r


def factors_from_period(a: int, r: int, n: int) -> tuple[int, int]:
    half = pow(a, r // 2, n)
    return tuple(sorted((math.gcd(half - 1, n), math.gcd(half + 1, n))))


def modexp_oracle(a: int) -> GateDef:
    """Permutation ``|x>|w> -> |x>|w XOR (a**x mod 15)>`` on eight wires."""
    _check_coprime(a, MODULUS)
    size = 2**REGISTER_QUBITS
    dim = size * size
    matrix = np.zeros((dim, dim), dtype=complex)
    for x in range(size):
        residue = pow(a, x, MODULUS)
        for w in range(size):
            matrix[x * size + (w ^ residue), x * size + w] = 1
    return GateDef("modexp", 2 * REGISTER_QUBITS, matrix, (float(a),))


def shor15_circuit(a: int) -> Circuit:
    """Hadamards on the upper register followed by the modular oracle."""
    circuit = hadamard_layer(2 * REGISTER_QUBITS, UPPER)
    return circuit.add(modexp_oracle(a), *UPPER, *LOWER)


def _period_from_outcomes(a: int, outcomes: list[int]) -> int:
    size = 2**REGISTER_QUBITS
    candidates = sorted({size // math.gcd(y, size) for y in outcomes})
    for r in candidates:
        if r % 2 or pow(a, r, MODULUS) != 1:
            continue
        if pow(a, r // 2, MODULUS) == MODULUS - 1:
            continue
        return r
    raise MethodFailureError(f"No usable period for a={a} among candidates {candidates}")


def shor15(
    a: int,
    conditioned_residue: Optional[int] = None,
    condition_branch: Optional[int] = None,
    seed: int = 0,
) -> Shor15Result:
    """Factor 15 with base ``a``.

    The lower register is either projected onto ``conditioned_residue``,
    onto the residue ``a**condition_branch mod 15``, or measured with a
    generator seeded by ``seed``. The returned distribution is exact.

    Raises:
        ValidationError: If ``a`` is not coprime to 15 or the residue never occurs.
        MethodFailureError: If no outcome yields a usable even period.
    """
    _check_coprime(a, MODULUS)
    if conditioned_residue is not None and condition_branch is not None:
        raise ValidationError("Give a conditioned residue or a branch, not both")
    if condition_branch is not None:
        if not 0 <= condition_branch < 2**REGISTER_QUBITS:
            raise ValidationError(f"Branch {condition_branch} is not a 4-bit value")
        conditioned_residue = pow(a, condition_branch, MODULUS)

    state = apply_circuit(basis_state(2 * REGISTER_QUBITS, 0), shor15_circuit(a))
    if conditioned_residue is None:
        outcome = measure_subset(state, LOWER, CounterRng(seed))
        residue = int(outcome.bitstring, 2)
        post_state, probability = outcome.post_state, outcome.probability
    else:
        residues = {pow(a, x, MODULUS) for x in range(2**REGISTER_QUBITS)}
        if conditioned_residue not in residues:
            raise ValidationError(f"Residue {conditioned_residue} never occurs for a={a}")
        residue = conditioned_residue
        bits = decimal_to_binary(residue, REGISTER_QUBITS)
        post_state, probability = collapse(state, LOWER, bits)

    final = apply_circuit(post_state, Circuit(2 * REGISTER_QUBITS).extend(iqft(REGISTER_QUBITS)))
    size = 2**REGISTER_QUBITS
    upper = np.array([final.amplitudes[x * size + residue] for x in range(size)])
    distribution = np.abs(upper) ** 2
    outcomes = [y for y, p in enumerate(distribution) if p > SUPPORT_EPS]
    period = _period_from_outcomes(a, outcomes)
    factors = factors_from_period(a, period, MODULUS)
    logger.info(f"a={a}: residue {residue}, outcomes {outcomes}, period {period}, factors {factors}")
    return Shor15Result(a, residue, probability, upper, distribution, period, factors)
