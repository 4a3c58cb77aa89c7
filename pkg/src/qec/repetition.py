"""Classical repetition code: flip statistics and majority decoding."""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import ValidationError

logger = logging.getLogger(__name__)

RATIO_REL_TOL = 1e-12


@dataclass(frozen=True)
class RepetitionStats:
    """Distribution of the number of flipped copies when one bit is sent ``n`` times.

    ``counts[k]`` is the probability that exactly k copies flipped. ``failure``
    is the probability that majority voting decodes the wrong bit; for even
    ``n`` a tie counts as a failure.
    """

    p: float
    n: int
    counts: tuple[float, ...]
    failure: float


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"Flip probability must lie in [0, 1], got {p}")


def repetition_stats(p: float, n: int) -> RepetitionStats:
    _check_probability(p)
    if n < 1:
        raise ValidationError(f"Need at least one copy, got {n}")
    q = 1.0 - p
    counts = tuple(math.comb(n, k) * p**k * q ** (n - k) for k in range(n + 1))
    failure = sum(c for k, c in enumerate(counts) if 2 * k >= n + (n % 2))
    return RepetitionStats(p, n, counts, failure)


def ratio_checks(p: float) -> tuple[float, float, float]:
    """For three copies, ``P(no flip)`` divided by ``P(1 flip)``, ``P(2 flips)``, ``P(3 flips)``.

    These equal ``(q/p)/3``, ``(q/p)**2/3`` and ``(q/p)**3`` with ``q = 1 - p``.

    Raises:
        ValidationError: If p is 0 or 1.
    """
    _check_probability(p)
    if p in (0.0, 1.0):
        raise ValidationError(f"Ratios are undefined for p={p}")
    counts = repetition_stats(p, 3).counts
    ratios = (counts[0] / counts[1], counts[0] / counts[2], counts[0] / counts[3])
    odds = (1.0 - p) / p
    expected = (odds / 3, odds**2 / 3, odds**3)
    for got, want in zip(ratios, expected):
        if not math.isclose(got, want, rel_tol=RATIO_REL_TOL):
            raise ValidationError(f"Ratio {got!r} differs from {want!r}")
    return ratios


def majority_vote(bits: Sequence[int]) -> int:
    """Decoded bit of a repetition codeword; ties decode to 0."""
    if not bits or any(b not in (0, 1) for b in bits):
        raise ValidationError(f"Codeword must be a non-empty 0/1 sequence, got {bits!r}")
    return int(2 * sum(bits) > len(bits))


def parity_check(b1: int, b2: int, b3: int) -> tuple[int, int]:
    """Classical syndrome ``(b1 XOR b2, b2 XOR b3)`` of a three-bit codeword."""
    for b in (b1, b2, b3):
        if b not in (0, 1):
            raise ValidationError(f"Bits must be 0 or 1, got {(b1, b2, b3)}")
    return b1 ^ b2, b2 ^ b3


def max_correctable_flips(n: int) -> int:
    if n < 1:
        raise ValidationError(f"Need at least one copy, got {n}")
    return (n - 1) // 2
