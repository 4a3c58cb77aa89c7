"""Dense complex matrix primitives.

Every matrix is a two-dimensional ``numpy`` array of ``complex128`` stored in
row-major order. This module is the reference math the fast kernels in
:mod:`src.sim.circuit` are tested against, so it favours exactness over speed.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import reduce
from typing import Union

import numpy as np
import numpy.typing as npt

from ..errors import DimensionError, ValidationError

logger = logging.getLogger(__name__)

DenseMatrix = npt.NDArray[np.complex128]

DEFAULT_EPS = 1e-10
HERMITIAN_EPS = 1e-9

PAULI_LETTERS = ("I", "X", "Y", "Z")

PAULI_MATRICES: dict[str, DenseMatrix] = {
    "I": np.array([[1, 0], [0, 1]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
for _m in PAULI_MATRICES.values():
    _m.setflags(write=False)


@dataclass(frozen=True)
class Tolerance:
    """Comparison tolerance on the max-entry complex modulus."""

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not (self.eps > 0 and np.isfinite(self.eps)):
            raise ValidationError(f"Tolerance must be positive and finite, got {self.eps}")


DEFAULT_TOLERANCE = Tolerance()


def as_matrix(entries) -> DenseMatrix:
    """Build a read-only complex matrix, rejecting NaN/Inf and empty shapes.

    Args:
        entries: Anything ``numpy.asarray`` accepts, two-dimensional.

    Returns:
        A read-only ``complex128`` copy.

    Raises:
        ValidationError: If the input is not 2-D, is empty, or has non-finite entries.
    """
    m = np.array(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValidationError(f"Expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("Matrix entries must be finite")
    m.setflags(write=False)
    return m


def num_qubits_for_dim(dim: int) -> int:
    """Return n such that dim == 2**n, or raise DimensionError."""
    if dim < 1 or dim & (dim - 1):
        raise DimensionError(f"Dimension {dim} is not a power of two")
    return dim.bit_length() - 1


def kron(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Kronecker product; block (i, j) of the result is ``a[i, j] * b``."""
    return np.kron(a, b)


def kron_all(*factors: DenseMatrix) -> DenseMatrix:
    """Kronecker product of several factors, leftmost factor most significant."""
    if not factors:
        return np.eye(1, dtype=complex)
    return reduce(np.kron, factors)


def dagger(a: DenseMatrix) -> DenseMatrix:
    """Conjugate transpose."""
    return np.conj(a).T


def max_entry_distance(a: DenseMatrix, b: DenseMatrix) -> float:
    """Largest complex modulus of ``a - b``."""
    if a.shape != b.shape:
        raise ValidationError(f"Shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def matrices_close(a: DenseMatrix, b: DenseMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Matrix equality in the max-entry sense."""
    return a.shape == b.shape and max_entry_distance(a, b) <= tol.eps


def _require_square(a: DenseMatrix) -> int:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"Expected a square matrix, got shape {a.shape}")
    return a.shape[0]


def is_unitary(a: DenseMatrix, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff ``max|a a^dagger - I| <= tol.eps``.

    Raises:
        ValidationError: If ``a`` is not square.
    """
    dim = _require_square(a)
    return max_entry_distance(a @ dagger(a), np.eye(dim, dtype=complex)) <= tol.eps


def is_hermitian(a: DenseMatrix, tol: Tolerance = Tolerance(HERMITIAN_EPS)) -> bool:
    """True iff ``max|a - a^dagger| <= tol.eps``."""
    _require_square(a)
    return max_entry_distance(a, dagger(a)) <= tol.eps


def herm_exp(h: DenseMatrix, t: float) -> DenseMatrix:
    """Return ``exp(-i h t)`` for Hermitian ``h`` via eigendecomposition.

    Raises:
        ValidationError: If ``h`` is not Hermitian within 1e-9.
    """
    if not is_hermitian(h):
        raise ValidationError("herm_exp requires a Hermitian matrix")
    # eigh only reads one triangle; symmetrize so rounding noise cannot leak in
    hs = 0.5 * (h + dagger(h))
    eigenvalues, vectors = np.linalg.eigh(hs)
    phases = np.exp(-1j * eigenvalues * t)
    return (vectors * phases) @ dagger(vectors)


def phase_align(a: DenseMatrix, reference: DenseMatrix) -> DenseMatrix:
    """Multiply ``a`` by the global phase that best aligns it with ``reference``.

    If ``a == e^{i phi} reference`` the result equals ``reference`` up to rounding.
    """
    overlap = np.vdot(a.ravel(), reference.ravel())
    if abs(overlap) == 0:
        return a
    return a * (overlap / abs(overlap))


def pauli_strings(n: int) -> list[str]:
    """All 4**n Pauli strings over I, X, Y, Z in lexicographic order."""
    return ["".join(p) for p in itertools.product(PAULI_LETTERS, repeat=n)]


def pauli_word_matrix(word: str) -> DenseMatrix:
    """Kronecker product of the Pauli letters in ``word``."""
    try:
        return kron_all(*(PAULI_MATRICES[letter] for letter in word))
    except KeyError as e:
        raise ValidationError(f"Unknown Pauli letter {e.args[0]!r} in {word!r}") from None


def pauli_decompose(m: DenseMatrix) -> dict[str, Union[float, complex]]:
    """Coefficients ``h_A = tr(sigma_A^dagger m) / 2**n`` of ``m`` in the Pauli basis.

    Coefficients are returned as ``float`` when ``m`` is Hermitian (they are
    real in that case) and as ``complex`` otherwise.

    Raises:
        DimensionError: If ``m`` is not ``2**n`` square.
    """
    dim = _require_square(m)
    n = num_qubits_for_dim(dim)
    hermitian = is_hermitian(m)
    coefficients: dict[str, Union[float, complex]] = {}
    for word in pauli_strings(n):
        sigma = pauli_word_matrix(word)
        # tr(A^dagger B) == sum(conj(A) * B)
        value = complex(np.sum(np.conj(sigma) * m)) / dim
        coefficients[word] = value.real if hermitian else value
    logger.debug(f"Decomposed {dim}x{dim} matrix into {len(coefficients)} Pauli terms")
    return coefficients


def pauli_reconstruct(coefficients: dict[str, Union[float, complex]]) -> DenseMatrix:
    """Inverse of :func:`pauli_decompose`: ``sum_A h_A sigma_A``."""
    if not coefficients:
        raise ValidationError("Cannot reconstruct from an empty coefficient map")
    lengths = {len(word) for word in coefficients}
    if len(lengths) != 1:
        raise ValidationError(f"Pauli strings have mixed lengths: {sorted(lengths)}")
    dim = 2 ** lengths.pop()
    total = np.zeros((dim, dim), dtype=complex)
    for word, value in coefficients.items():
        total = total + value * pauli_word_matrix(word)
    return total
