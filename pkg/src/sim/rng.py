"""Counter-based pseudorandom generator for reproducible sampling.

Output k of a stream seeded with ``seed`` is SplitMix64's finalizer applied to
``seed + (k + 1) * 0x9E3779B97F4A7C15`` (all arithmetic mod 2**64). Because each
output depends only on (seed, k), any block of draws can be produced with a
single vectorized pass and is identical on every platform.

Uniform doubles use the top 53 bits: ``(x >> 11) * 2**-53``.
"""

import logging

import numpy as np
import numpy.typing as npt

from ..errors import ValidationError

logger = logging.getLogger(__name__)

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
MIX_2 = np.uint64(0x94D049BB133111EB)
MASK_64 = (1 << 64) - 1


def splitmix64_block(seed: int, start: int, count: int) -> npt.NDArray[np.uint64]:
    """Outputs ``start .. start+count-1`` of the stream for ``seed``."""
    counters = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & MASK_64) + counters * GOLDEN_GAMMA
    z = (z ^ (z >> np.uint64(30))) * MIX_1
    z = (z ^ (z >> np.uint64(27))) * MIX_2
    return z ^ (z >> np.uint64(31))


class CounterRng:
    """Stateful cursor over a SplitMix64 stream.

    A generator value belongs to one caller at a time; do not share it
    between threads.
    """

    def __init__(self, seed: int):
        if not 0 <= int(seed) <= MASK_64:
            raise ValidationError(f"Seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = int(seed)
        self.counter = 0

    def next_uint64(self, count: int = 1) -> npt.NDArray[np.uint64]:
        if count < 0:
            raise ValidationError(f"Draw count must be non-negative, got {count}")
        block = splitmix64_block(self.seed, self.counter, count)
        self.counter += count
        return block

    def uniforms(self, count: int) -> npt.NDArray[np.float64]:
        """``count`` doubles in ``[0, 1)``."""
        raw = self.next_uint64(count)
        return (raw >> np.uint64(11)).astype(np.float64) * (2.0**-53)
