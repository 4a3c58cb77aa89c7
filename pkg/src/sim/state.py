"""State vectors, basis labels and single-qubit Bloch parametrization.

Bit ordering is big-endian throughout the package: qubit 0 is the top wire
and the most significant bit of a basis index, so ``|i1 i2 ... in>`` has
decimal label ``sum_k 2**(n-k) * i_k``.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import numpy.typing as npt

from ..errors import ValidationError
from .linalg import DEFAULT_TOLERANCE, Tolerance

logger = logging.getLogger(__name__)

NORM_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class StateVector:
    """2**n complex amplitudes of an n-qubit register.

    Normalization is validated on request (:meth:`validate`), not enforced,
    because intermediate unnormalized values show up in channel math.
    """

    num_qubits: int
    amplitudes: npt.NDArray[np.complex128] = field(repr=False)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValidationError(f"A state needs at least one qubit, got {self.num_qubits}")
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != 2**self.num_qubits:
            raise ValidationError(
                f"{self.num_qubits} qubits need {2 ** self.num_qubits} amplitudes, "
                f"got {amps.shape[0]}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValidationError("Amplitudes must be finite")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_amplitudes(cls, amplitudes: Sequence[complex]) -> "StateVector":
        """Infer the qubit count from the amplitude count."""
        count = len(amplitudes)
        if count < 2 or count & (count - 1):
            raise ValidationError(f"Amplitude count {count} is not a power of two >= 2")
        return cls(count.bit_length() - 1, np.asarray(amplitudes, dtype=complex))

    @property
    def dim(self) -> int:
        return 2**self.num_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, eps: float = NORM_EPS) -> bool:
        return abs(float(np.sum(np.abs(self.amplitudes) ** 2)) - 1.0) <= eps

    def validate(self, eps: float = NORM_EPS) -> "StateVector":
        """Assert ``sum |alpha_x|**2 == 1`` within ``eps`` and return self."""
        total = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(total - 1.0) > eps:
            raise ValidationError(f"State is not normalized: sum |alpha|^2 = {total!r}")
        return self

    def normalized(self) -> "StateVector":
        norm = self.norm()
        if norm == 0:
            raise ValidationError("Cannot normalize the zero vector")
        return StateVector(self.num_qubits, self.amplitudes / norm)

    def __len__(self) -> int:
        return self.dim


@dataclass(frozen=True)
class BasisLabel:
    """A computational basis label in binary and decimal form."""

    bits: tuple[int, ...]
    decimal: int

    @classmethod
    def from_decimal(cls, x: int, n: int) -> "BasisLabel":
        return cls(tuple(decimal_to_binary(x, n)), x)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BasisLabel":
        return cls(tuple(bits), binary_to_decimal(bits))

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class BlochAngles:
    """Polar angle theta in [0, pi] and azimuth phi in [0, 2 pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValidationError(f"theta must lie in [0, pi], got {self.theta}")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValidationError(f"phi must lie in [0, 2pi), got {self.phi}")


def binary_to_decimal(bits: Sequence[int]) -> int:
    """Big-endian bit sequence (or '0'/'1' string) to integer."""
    value = 0
    for b in bits:
        bit = int(b)
        if bit not in (0, 1):
            raise ValidationError(f"Not a bit: {b!r}")
        value = (value << 1) | bit
    return value


def decimal_to_binary(x: int, n: int) -> list[int]:
    """Integer to a big-endian list of ``n`` bits.

    Raises:
        ValidationError: If ``x`` is outside ``[0, 2**n)``.
    """
    if n < 1 or not 0 <= x < 2**n:
        raise ValidationError(f"{x} does not fit in {n} bits")
    return [(x >> (n - 1 - k)) & 1 for k in range(n)]


def bits_to_string(bits: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in bits)


def basis_state(n: int, label: int) -> StateVector:
    """``|label>`` on ``n`` qubits."""
    if n < 1 or not 0 <= label < 2**n:
        raise ValidationError(f"Basis label {label} out of range for {n} qubits")
    amps = np.zeros(2**n, dtype=complex)
    amps[label] = 1.0
    return StateVector(n, amps)


def plus_state() -> StateVector:
    return StateVector(1, np.array([1, 1], dtype=complex) / math.sqrt(2))


def minus_state() -> StateVector:
    return StateVector(1, np.array([1, -1], dtype=complex) / math.sqrt(2))


def ghz_state(n: int) -> StateVector:
    """``(|0...0> + |1...1>) / sqrt(2)``."""
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return StateVector(n, amps)


def random_state(n: int, generator: np.random.Generator) -> StateVector:
    """Haar-distributed unit state drawn from a numpy generator."""
    amps = generator.normal(size=2**n) + 1j * generator.normal(size=2**n)
    return StateVector(n, amps / np.linalg.norm(amps))


def from_bloch(angles: BlochAngles) -> StateVector:
    """``cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>``."""
    half = angles.theta / 2
    return StateVector(
        1, np.array([math.cos(half), np.exp(1j * angles.phi) * math.sin(half)], dtype=complex)
    )


def to_bloch(state: StateVector, tol: Tolerance = Tolerance(NORM_EPS)) -> BlochAngles:
    """Invert :func:`from_bloch` after removing the global phase.

    At the poles phi is meaningless and is reported as 0.
    """
    if state.num_qubits != 1:
        raise ValidationError("to_bloch requires a single-qubit state")
    state.validate(tol.eps)
    a0, a1 = state.amplitudes
    if abs(a0) > 0:
        a1 = a1 * np.conj(a0) / abs(a0)
    theta = 2 * math.atan2(abs(a1), abs(a0))
    theta = min(max(theta, 0.0), math.pi)
    if abs(a1) <= tol.eps or abs(a0) <= tol.eps:
        return BlochAngles(theta, 0.0)
    phi = math.atan2(a1.imag, a1.real) % (2 * math.pi)
    # atan2 can round up to exactly 2 pi for tiny negative angles
    if phi >= 2 * math.pi:
        phi = 0.0
    return BlochAngles(theta, phi)


def bloch_vector(state: StateVector) -> tuple[float, float, float]:
    """Cartesian Bloch coordinates ``(<X>, <Y>, <Z>)`` of a single-qubit state."""
    if state.num_qubits != 1:
        raise ValidationError("bloch_vector requires a single-qubit state")
    a0, a1 = state.amplitudes
    cross = np.conj(a0) * a1
    return (
        float(2 * cross.real),
        float(2 * cross.imag),
        float(abs(a0) ** 2 - abs(a1) ** 2),
    )


def tensor(a: StateVector, b: StateVector) -> StateVector:
    """``|a> (x) |b>``; a's qubits become the top (most significant) wires."""
    return StateVector(a.num_qubits + b.num_qubits, np.kron(a.amplitudes, b.amplitudes))


def _require_same_size(a: StateVector, b: StateVector) -> None:
    if a.num_qubits != b.num_qubits:
        raise ValidationError(f"Size mismatch: {a.num_qubits} vs {b.num_qubits} qubits")


def inner_product(a: StateVector, b: StateVector) -> complex:
    """``<a|b>``, conjugate-linear in ``a``."""
    _require_same_size(a, b)
    return complex(np.vdot(a.amplitudes, b.amplitudes))


def fidelity_mod_phase(a: StateVector, b: StateVector) -> float:
    """``|<a|b>|``; equals 1 iff the states agree up to a global phase."""
    return min(abs(inner_product(a, b)), 1.0)


def is_product_bipartition(state: StateVector, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff a two-qubit state factors as ``|u> (x) |v>``.

    The 2x2 amplitude matrix has rank one exactly when its determinant vanishes.
    """
    if state.num_qubits != 2:
        raise ValidationError("is_product_bipartition requires a two-qubit state")
    a00, a01, a10, a11 = state.amplitudes
    return abs(a00 * a11 - a01 * a10) <= tol.eps


def is_product_split(state: StateVector, qubit: int, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff ``qubit`` is unentangled from the rest of the register.

    Arranges the amplitudes as a ``2 x 2**(n-1)`` matrix (row = bit of ``qubit``)
    and checks that every 2x2 minor vanishes.
    """
    n = state.num_qubits
    if not 0 <= qubit < n:
        raise ValidationError(f"Qubit {qubit} out of range for {n} qubits")
    if n == 1:
        return True
    tensor_form = state.amplitudes.reshape([2] * n)
    rows = np.moveaxis(tensor_form, qubit, 0).reshape(2, -1)
    minors = np.outer(rows[0], rows[1]) - np.outer(rows[1], rows[0])
    return float(np.max(np.abs(minors))) <= tol.eps
