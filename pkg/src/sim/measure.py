"""Projective measurement: exact probabilities, collapse and seeded sampling."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..errors import ValidationError
from .linalg import DenseMatrix
from .rng import MASK_64, CounterRng
from .state import StateVector, bits_to_string, decimal_to_binary

logger = logging.getLogger(__name__)

# Branches lighter than this are never sampled or collapsed onto.
MIN_BRANCH_PROBABILITY = 1e-15


@dataclass(frozen=True)
class MeasurementOutcome:
    """Result of measuring ``qubits``: sampled bits, their probability and the collapsed state."""

    qubits: tuple[int, ...]
    bits: tuple[int, ...]
    probability: float
    post_state: StateVector

    @property
    def bitstring(self) -> str:
        return bits_to_string(self.bits)


@dataclass(frozen=True)
class ShotConfig:
    """Shot count and 64-bit seed for :func:`sample`."""

    shots: int
    seed: int = 0

    def __post_init__(self):
        if self.shots < 1:
            raise ValidationError(f"shots must be >= 1, got {self.shots}")
        if not 0 <= self.seed <= MASK_64:
            raise ValidationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def _check_qubits(state: StateVector, qubits: Sequence[int]) -> tuple[int, ...]:
    qs = tuple(int(q) for q in qubits)
    if not qs:
        raise ValidationError("At least one qubit must be measured")
    if len(set(qs)) != len(qs):
        raise ValidationError(f"Duplicate qubits in {qs}")
    for q in qs:
        if not 0 <= q < state.num_qubits:
            raise ValidationError(f"Qubit {q} out of range for {state.num_qubits} qubits")
    return qs


def probabilities(state: StateVector) -> npt.NDArray[np.float64]:
    """``|alpha_x|**2`` for every basis label x."""
    return np.abs(state.amplitudes) ** 2


def marginal(state: StateVector, qubit: int, outcome: int) -> float:
    """Probability that ``qubit`` reads ``outcome``."""
    (q,) = _check_qubits(state, [qubit])
    if outcome not in (0, 1):
        raise ValidationError(f"Outcome must be 0 or 1, got {outcome}")
    indices = np.arange(state.dim)
    mask = ((indices >> (state.num_qubits - 1 - q)) & 1) == outcome
    return float(np.sum(probabilities(state)[mask]))


def joint_distribution(state: StateVector, qubits: Sequence[int]) -> npt.NDArray[np.float64]:
    """Distribution over the ``2**m`` outcomes of ``qubits`` (qubits[0] most significant)."""
    qs = _check_qubits(state, qubits)
    n = state.num_qubits
    tensor_form = probabilities(state).reshape([2] * n)
    rest = [q for q in range(n) if q not in qs]
    moved = np.transpose(tensor_form, list(qs) + rest).reshape(2 ** len(qs), -1)
    return moved.sum(axis=1)


def collapse(
    state: StateVector, qubits: Sequence[int], bits: Sequence[int]
) -> tuple[StateVector, float]:
    """Project onto ``qubits == bits`` and renormalize.

    Returns:
        (post_state, probability of the branch).

    Raises:
        ValidationError: If the branch has (numerically) zero probability.
    """
    qs = _check_qubits(state, qubits)
    if len(bits) != len(qs) or any(b not in (0, 1) for b in bits):
        raise ValidationError(f"Bits {tuple(bits)} do not match qubits {qs}")
    n = state.num_qubits
    indices = np.arange(state.dim)
    keep = np.ones(state.dim, dtype=bool)
    for q, b in zip(qs, bits):
        keep &= ((indices >> (n - 1 - q)) & 1) == b
    projected = np.where(keep, state.amplitudes, 0)
    probability = float(np.sum(np.abs(projected) ** 2))
    if probability < MIN_BRANCH_PROBABILITY:
        raise ValidationError(f"Branch {tuple(bits)} on qubits {qs} has zero probability")
    return StateVector(n, projected / math.sqrt(probability)), probability


def _inverse_cdf(distribution: npt.NDArray[np.float64], uniforms: npt.NDArray[np.float64]):
    weights = np.where(distribution >= MIN_BRANCH_PROBABILITY, distribution, 0.0)
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    picks = np.searchsorted(cdf, uniforms, side="right")
    return np.minimum(picks, len(distribution) - 1)


def measure_subset(state: StateVector, qubits: Sequence[int], rng: CounterRng) -> MeasurementOutcome:
    """Sample a joint outcome of ``qubits`` and collapse the state onto it."""
    qs = _check_qubits(state, qubits)
    distribution = joint_distribution(state, qs)
    pick = int(_inverse_cdf(distribution, rng.uniforms(1))[0])
    bits = tuple(decimal_to_binary(pick, len(qs)))
    post_state, probability = collapse(state, qs, bits)
    logger.debug(f"Measured qubits {qs} -> {bits_to_string(bits)} (p={probability:.6g})")
    return MeasurementOutcome(qs, bits, probability, post_state)


def sample(state: StateVector, qubits: Sequence[int], config: ShotConfig) -> dict[str, int]:
    """Histogram of ``config.shots`` independent draws, keyed by outcome bitstring.

    Only observed outcomes appear; keys are sorted.
    """
    qs = _check_qubits(state, qubits)
    distribution = joint_distribution(state, qs)
    uniforms = CounterRng(config.seed).uniforms(config.shots)
    counts = np.bincount(_inverse_cdf(distribution, uniforms), minlength=len(distribution))
    return {
        bits_to_string(decimal_to_binary(x, len(qs))): int(c)
        for x, c in enumerate(counts)
        if c > 0
    }


def projector(n: int, label: int) -> DenseMatrix:
    """``|label><label|`` on n qubits."""
    if not 0 <= label < 2**n:
        raise ValidationError(f"Label {label} out of range for {n} qubits")
    matrix = np.zeros((2**n, 2**n), dtype=complex)
    matrix[label, label] = 1
    return matrix
