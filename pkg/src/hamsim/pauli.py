"""Pauli strings and real Pauli-sum Hamiltonians."""

import logging
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..errors import DimensionError, ValidationError
from ..sim.linalg import PAULI_LETTERS, DenseMatrix, pauli_word_matrix

logger = logging.getLogger(__name__)

MAX_PAULI_QUBITS = 10

# sigma_a sigma_b = phase * sigma_c for a != b, both non-identity
_LETTER_PRODUCTS: dict[tuple[str, str], tuple[complex, str]] = {
    ("X", "Y"): (1j, "Z"),
    ("Y", "Z"): (1j, "X"),
    ("Z", "X"): (1j, "Y"),
    ("Y", "X"): (-1j, "Z"),
    ("Z", "Y"): (-1j, "X"),
    ("X", "Z"): (-1j, "Y"),
}


def _multiply_letters(a: str, b: str) -> tuple[complex, str]:
    if a == "I":
        return 1, b
    if b == "I":
        return 1, a
    if a == b:
        return 1, "I"
    return _LETTER_PRODUCTS[(a, b)]


@dataclass(frozen=True)
class PauliString:
    """A tensor product of single-qubit Paulis, e.g. ``"XIZ"`` (wire 0 first)."""

    letters: str

    def __post_init__(self):
        letters = self.letters.upper()
        if not letters:
            raise ValidationError("A Pauli string needs at least one letter")
        bad = set(letters) - set(PAULI_LETTERS)
        if bad:
            raise ValidationError(f"Unknown Pauli letters {sorted(bad)} in {self.letters!r}")
        object.__setattr__(self, "letters", letters)

    @property
    def n(self) -> int:
        return len(self.letters)

    def support(self) -> list[int]:
        """Wires carrying a non-identity letter."""
        return [q for q, letter in enumerate(self.letters) if letter != "I"]

    def is_identity(self) -> bool:
        return not self.support()

    def multiply(self, other: "PauliString") -> tuple[complex, "PauliString"]:
        """``self * other = phase * product`` with phase in ``{1, -1, 1j, -1j}``."""
        if self.n != other.n:
            raise ValidationError(f"Cannot multiply Pauli strings of length {self.n} and {other.n}")
        phase: complex = 1
        letters = []
        for a, b in zip(self.letters, other.letters):
            factor, letter = _multiply_letters(a, b)
            phase *= factor
            letters.append(letter)
        return phase, PauliString("".join(letters))

    def matrix(self) -> DenseMatrix:
        return pauli_string_matrix(self)

    def __str__(self) -> str:
        return self.letters


def pauli_string_matrix(p: PauliString) -> DenseMatrix:
    """Kronecker product of the letters of ``p``.

    Raises:
        DimensionError: If ``p`` is longer than the dense limit.
    """
    if p.n > MAX_PAULI_QUBITS:
        raise DimensionError(f"Dense Pauli strings are limited to {MAX_PAULI_QUBITS} qubits, got {p.n}")
    return pauli_word_matrix(p.letters)


@dataclass(frozen=True)
class PauliSumHamiltonian:
    """``H = sum_l c_l P_l`` with real coefficients and equal-length strings."""

    n: int
    terms: tuple[tuple[float, PauliString], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"A Hamiltonian needs at least one qubit, got {self.n}")
        if not self.terms:
            raise ValidationError("A Hamiltonian needs at least one term")
        normalized = []
        for coefficient, string in self.terms:
            if np.iscomplexobj(coefficient):
                raise ValidationError("Pauli-sum coefficients must be real")
            value = float(coefficient)
            if not math.isfinite(value):
                raise ValidationError(f"Coefficient {coefficient!r} is not finite")
            if string.n != self.n:
                raise ValidationError(f"Term {string} has length {string.n}, expected {self.n}")
            normalized.append((value, string))
        object.__setattr__(self, "terms", tuple(normalized))

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[float, str]]) -> "PauliSumHamiltonian":
        """Build from ``(coefficient, "XYZ")`` pairs."""
        parsed = tuple((c, PauliString(word)) for c, word in terms)
        if not parsed:
            raise ValidationError("A Hamiltonian needs at least one term")
        return cls(parsed[0][1].n, parsed)

    def matrix(self) -> DenseMatrix:
        """Dense ``sum_l c_l P_l``."""
        dim = 2**self.n
        total = np.zeros((dim, dim), dtype=complex)
        for coefficient, string in self.terms:
            total = total + coefficient * pauli_string_matrix(string)
        return total

    def coefficients(self) -> dict[str, float]:
        """Coefficient per distinct string (repeated strings summed)."""
        merged: dict[str, float] = {}
        for coefficient, string in self.terms:
            merged[string.letters] = merged.get(string.letters, 0.0) + coefficient
        return merged

    def __str__(self) -> str:
        return " + ".join(f"{c!r}*{p}" for c, p in self.terms)
