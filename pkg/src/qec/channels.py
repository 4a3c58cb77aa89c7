"""Density matrices and weighted Kraus channels."""

import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..errors import DimensionError, ValidationError
from ..sim.linalg import (
    PAULI_LETTERS,
    PAULI_MATRICES,
    DenseMatrix,
    Tolerance,
    as_matrix,
    dagger,
    is_hermitian,
    kron_all,
    num_qubits_for_dim,
)
from ..sim.state import StateVector

logger = logging.getLogger(__name__)

MAX_DENSITY_QUBITS = 6
DENSITY_EPS = 1e-10
CHANNEL_EPS = 1e-9
EIGENVALUE_FLOOR = -1e-9


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite ``2**n`` matrix."""

    n: int
    entries: DenseMatrix = field(repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DENSITY_QUBITS:
            raise DimensionError(f"Density matrices are limited to {MAX_DENSITY_QUBITS} qubits, got {self.n}")
        rho = as_matrix(self.entries)
        if rho.shape != (2**self.n, 2**self.n):
            raise ValidationError(f"{self.n} qubits need a {2 ** self.n}-square matrix, got {rho.shape}")
        if not is_hermitian(rho, Tolerance(DENSITY_EPS)):
            raise ValidationError("Density matrix is not Hermitian")
        trace = complex(np.trace(rho))
        if abs(trace - 1) > DENSITY_EPS:
            raise ValidationError(f"Density matrix trace is {trace!r}, expected 1")
        smallest = float(np.min(np.linalg.eigvalsh(0.5 * (rho + dagger(rho)))))
        if smallest < EIGENVALUE_FLOOR:
            raise ValidationError(f"Density matrix has negative eigenvalue {smallest!r}")
        object.__setattr__(self, "entries", rho)

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def probability(self, label: int) -> float:
        return float(self.entries[label, label].real)

    def fidelity(self, state: StateVector) -> float:
        """``<psi|rho|psi>``."""
        if state.num_qubits != self.n:
            raise ValidationError("State and density matrix sizes differ")
        return float(np.vdot(state.amplitudes, self.entries @ state.amplitudes).real)


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """``rho -> sum_A p_A E_A rho E_A^dagger`` with ``sum_A p_A E_A^dagger E_A = I``."""

    operators: tuple[tuple[DenseMatrix, float], ...]
    name: str = "kraus"

    def __post_init__(self):
        if not self.operators:
            raise ValidationError("A channel needs at least one operator")
        checked = []
        for matrix, weight in self.operators:
            m = as_matrix(matrix)
            if weight < 0:
                raise ValidationError(f"Kraus weight {weight} is negative")
            checked.append((m, float(weight)))
        shapes = {m.shape for m, _ in checked}
        if len(shapes) != 1:
            raise ValidationError(f"Kraus operators have mixed shapes {sorted(shapes)}")
        dim = checked[0][0].shape[0]
        num_qubits_for_dim(dim)
        completeness = sum(w * dagger(m) @ m for m, w in checked)
        if float(np.max(np.abs(completeness - np.eye(dim)))) > CHANNEL_EPS:
            raise ValidationError(f"Channel {self.name!r} is not trace preserving")
        object.__setattr__(self, "operators", tuple(checked))

    @property
    def n(self) -> int:
        return num_qubits_for_dim(self.operators[0][0].shape[0])


def to_density(state: StateVector) -> DensityMatrix:
    """``|psi><psi|``."""
    state.validate()
    return DensityMatrix(state.num_qubits, np.outer(state.amplitudes, np.conj(state.amplitudes)))


def apply_channel(rho: DensityMatrix, channel: KrausChannel) -> DensityMatrix:
    if channel.n != rho.n:
        raise ValidationError(f"Channel acts on {channel.n} qubits, density matrix has {rho.n}")
    out = sum(w * (m @ rho.entries @ dagger(m)) for m, w in channel.operators)
    return DensityMatrix(rho.n, 0.5 * (out + dagger(out)))


def apply_channels(rho: DensityMatrix, channels: Sequence[KrausChannel]) -> DensityMatrix:
    for channel in channels:
        rho = apply_channel(rho, channel)
    return rho


def pauli_channel(weights: Sequence[float]) -> KrausChannel:
    """Single-qubit Pauli channel with weights for I, X, Y, Z."""
    if len(weights) != 4:
        raise ValidationError(f"Pauli channel needs 4 weights, got {len(weights)}")
    return KrausChannel(
        tuple((PAULI_MATRICES[letter], w) for letter, w in zip(PAULI_LETTERS, weights)),
        "pauli",
    )


def bit_flip_channel(p: float) -> KrausChannel:
    """X with probability p."""
    return KrausChannel(((PAULI_MATRICES["I"], 1 - p), (PAULI_MATRICES["X"], p)), "bit_flip")


def depolarizing_channel(p: float) -> KrausChannel:
    """``rho -> (1 - p) rho + p I/2``."""
    return KrausChannel(
        tuple((PAULI_MATRICES[letter], w) for letter, w in zip(PAULI_LETTERS, (1 - 3 * p / 4, p / 4, p / 4, p / 4))),
        "depolarizing",
    )


def amplitude_damping_channel(gamma: float) -> KrausChannel:
    """Energy relaxation ``|1> -> |0>`` with probability gamma."""
    if not 0 <= gamma <= 1:
        raise ValidationError(f"Damping rate must lie in [0, 1], got {gamma}")
    e0 = np.array([[1, 0], [0, np.sqrt(1 - gamma)]], dtype=complex)
    e1 = np.array([[0, np.sqrt(gamma)], [0, 0]], dtype=complex)
    return KrausChannel(((e0, 1.0), (e1, 1.0)), "amplitude_damping")


def embed_channel(channel: KrausChannel, qubit: int, n: int) -> KrausChannel:
    """Act with ``channel`` on wires ``qubit ..`` of an n-qubit register."""
    k = channel.n
    if not 0 <= qubit <= n - k:
        raise ValidationError(f"Channel on {k} qubits does not fit at wire {qubit} of {n}")
    left = np.eye(2**qubit, dtype=complex)
    right = np.eye(2 ** (n - qubit - k), dtype=complex)
    return KrausChannel(
        tuple((kron_all(left, m, right), w) for m, w in channel.operators),
        f"{channel.name}@{qubit}",
    )
