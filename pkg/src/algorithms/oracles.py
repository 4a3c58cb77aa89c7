"""XOR oracles, Deutsch and Deutsch-Jozsa."""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from ..errors import PromiseViolationError, ValidationError
from ..sim.circuit import Circuit, apply_circuit, hadamard_layer
from ..sim.gates import GateDef
from ..sim.measure import ShotConfig, joint_distribution, sample
from ..sim.state import StateVector, basis_state

logger = logging.getLogger(__name__)

BRANCH_EPS = 1e-9
MAX_ORACLE_INPUTS = 12


class OracleVerdict(str, Enum):
    CONSTANT = "Constant"
    BALANCED = "Balanced"


@dataclass(frozen=True)
class BooleanOracle:
    """Truth table of ``f: {0,1}^n -> {0,1}``; ``table[x]`` is ``f(x)``."""

    n: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORACLE_INPUTS:
            raise ValidationError(f"Oracle input width must be in [1, {MAX_ORACLE_INPUTS}], got {self.n}")
        table = tuple(int(v) for v in self.table)
        if len(table) != 2**self.n:
            raise ValidationError(f"Oracle on {self.n} bits needs {2 ** self.n} entries, got {len(table)}")
        if any(v not in (0, 1) for v in table):
            raise ValidationError("Oracle table entries must be 0 or 1")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_bits(cls, bits: str) -> "BooleanOracle":
        """Parse a table such as ``"00001111"`` (entry x at position x)."""
        size = len(bits)
        if size < 2 or size & (size - 1) or set(bits) - {"0", "1"}:
            raise ValidationError(f"Oracle table {bits!r} must be 2**n characters of 0/1")
        return cls(size.bit_length() - 1, tuple(int(c) for c in bits))

    def __call__(self, x: int) -> int:
        return self.table[x]

    def bits(self) -> str:
        return "".join(str(v) for v in self.table)


def classify_table(f: BooleanOracle) -> Optional[OracleVerdict]:
    """Constant, Balanced, or None when the promise does not hold."""
    ones = sum(f.table)
    if ones in (0, len(f.table)):
        return OracleVerdict.CONSTANT
    if 2 * ones == len(f.table):
        return OracleVerdict.BALANCED
    return None


def oracle_unitary(f: BooleanOracle) -> GateDef:
    """Permutation ``|x>|j> -> |x>|j XOR f(x)>`` on n+1 wires (output wire last)."""
    dim = 2 ** (f.n + 1)
    matrix = np.zeros((dim, dim), dtype=complex)
    for x in range(2**f.n):
        for j in range(2):
            matrix[2 * x + (j ^ f(x)), 2 * x + j] = 1
    return GateDef("oracle", f.n + 1, matrix, tuple(float(v) for v in f.table))


def deutsch_jozsa_circuit(f: BooleanOracle) -> Circuit:
    """``H^n (x) H``, then ``U_f``, then ``H^n (x) 1``; run it on ``|0...0>|1>``."""
    n = f.n
    circuit = hadamard_layer(n + 1, range(n + 1))
    circuit.add(oracle_unitary(f), *range(n + 1))
    return circuit.extend(hadamard_layer(n + 1, range(n)))


def _final_state(f: BooleanOracle) -> StateVector:
    return apply_circuit(basis_state(f.n + 1, 1), deutsch_jozsa_circuit(f))


def zero_probability(f: BooleanOracle) -> float:
    """Probability that every upper (input) wire reads 0."""
    return float(joint_distribution(_final_state(f), range(f.n))[0])


def _verdict_from_probability(p_zero: float) -> OracleVerdict:
    if abs(p_zero - 1.0) <= BRANCH_EPS:
        return OracleVerdict.CONSTANT
    if p_zero <= BRANCH_EPS:
        return OracleVerdict.BALANCED
    raise ValidationError(f"Upper-register probability {p_zero!r} is neither 0 nor 1")


def deutsch(f: BooleanOracle) -> OracleVerdict:
    """Single-query Deutsch algorithm for a one-bit function."""
    if f.n != 1:
        raise ValidationError(f"Deutsch's algorithm takes a one-bit function, got n={f.n}")
    p_zero = zero_probability(f)
    logger.debug(f"Deutsch on table {f.bits()}: P(top=0)={p_zero:.12g}")
    return _verdict_from_probability(p_zero)


def deutsch_jozsa(f: BooleanOracle) -> OracleVerdict:
    """Deutsch-Jozsa from the exact probability of the all-zero upper outcome.

    Raises:
        PromiseViolationError: If the table is neither constant nor balanced.
    """
    if classify_table(f) is None:
        raise PromiseViolationError(f"Oracle table {f.bits()} is neither constant nor balanced")
    p_zero = zero_probability(f)
    logger.debug(f"Deutsch-Jozsa n={f.n}: P(0...0)={p_zero:.12g}")
    return _verdict_from_probability(p_zero)


def deutsch_jozsa_sample(f: BooleanOracle, config: ShotConfig) -> dict[str, int]:
    """Shot histogram of the upper register, for demonstration."""
    if classify_table(f) is None:
        raise PromiseViolationError(f"Oracle table {f.bits()} is neither constant nor balanced")
    return sample(_final_state(f), range(f.n), config)


def balanced_tables(n: int) -> list[BooleanOracle]:
    """Every balanced function on n bits (C(2**n, 2**(n-1)) of them)."""
    size = 2**n
    oracles = []
    for ones in combinations(range(size), size // 2):
        table = [0] * size
        for x in ones:
            table[x] = 1
        oracles.append(BooleanOracle(n, tuple(table)))
    return oracles


def parity_oracle(n: int, mask: Optional[Sequence[int]] = None) -> BooleanOracle:
    """``f(x) = parity of x & mask``; balanced for any non-zero mask."""
    m = sum(1 << (n - 1 - q) for q in (mask if mask is not None else range(n)))
    return BooleanOracle(n, tuple(bin(x & m).count("1") % 2 for x in range(2**n)))


def hadamard_transform_state(n: int, x: int) -> StateVector:
    """Closed form of ``H^n |x>``: ``sum_y (-1)**(x.y) |y> / sqrt(2**n)``."""
    if not 0 <= x < 2**n:
        raise ValidationError(f"Label {x} out of range for {n} qubits")
    labels = np.arange(2**n)
    signs = np.array([(-1) ** bin(x & y).count("1") for y in labels], dtype=complex)
    return StateVector(n, signs / np.sqrt(2**n))
