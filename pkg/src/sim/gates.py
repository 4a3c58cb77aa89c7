"""Gate catalog.

Every gate is a :class:`GateDef` holding its ``2**k`` square unitary. Controlled
gates always put the control on the new most significant wire; placing gates
on arbitrary wires is the job of :mod:`src.sim.circuit`.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import ValidationError
from .linalg import PAULI_MATRICES, DenseMatrix, Tolerance, as_matrix, dagger, is_unitary

logger = logging.getLogger(__name__)

# Construction guard; the catalog itself is tested at 1e-12.
GATE_TOLERANCE = Tolerance(1e-10)
UNIT_AXIS_EPS = 1e-9


@dataclass(frozen=True, eq=False)
class GateDef:
    """A named k-qubit unitary with the parameters it was built from."""

    name: str
    arity: int
    matrix: DenseMatrix = field(repr=False)
    params: tuple[float, ...] = ()

    def __post_init__(self):
        matrix = as_matrix(self.matrix)
        if self.arity < 1 or matrix.shape != (2**self.arity, 2**self.arity):
            raise ValidationError(
                f"Gate {self.name!r} of arity {self.arity} needs a "
                f"{2 ** self.arity}x{2 ** self.arity} matrix, got {matrix.shape}"
            )
        if not is_unitary(matrix, GATE_TOLERANCE):
            raise ValidationError(f"Gate {self.name!r} is not unitary")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

    def dagger(self) -> "GateDef":
        name = self.name[:-3] if self.name.endswith("_dg") else f"{self.name}_dg"
        return GateDef(name, self.arity, dagger(self.matrix), self.params)

    def power(self, k: int) -> "GateDef":
        """``U**k`` for a non-negative integer k."""
        if k < 0:
            raise ValidationError(f"Gate power must be non-negative, got {k}")
        return GateDef(f"{self.name}^{k}", self.arity, np.linalg.matrix_power(self.matrix, k), self.params)


def custom(name: str, matrix) -> GateDef:
    """Wrap an arbitrary unitary as a gate, inferring the arity."""
    m = as_matrix(matrix)
    dim = m.shape[0]
    if dim < 2 or dim & (dim - 1):
        raise ValidationError(f"Gate dimension {dim} is not a power of two")
    return GateDef(name, dim.bit_length() - 1, m)


def identity(k: int = 1) -> GateDef:
    return GateDef("id", k, np.eye(2**k, dtype=complex))


def pauli(axis: str) -> GateDef:
    """X, Y or Z."""
    key = axis.upper()
    if key not in ("X", "Y", "Z"):
        raise ValidationError(f"Unknown Pauli axis {axis!r}")
    return GateDef(key.lower(), 1, PAULI_MATRICES[key])


def hadamard() -> GateDef:
    return GateDef("h", 1, np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2))


def phase(phi: float) -> GateDef:
    """Relative phase gate ``P(phi) = diag(1, e^{i phi})``."""
    return GateDef("p", 1, np.diag([1, np.exp(1j * phi)]), (phi,))


def s() -> GateDef:
    return GateDef("s", 1, np.diag([1, 1j]))


def t() -> GateDef:
    # P(pi/4), although often called the pi/8 gate
    return GateDef("t", 1, np.diag([1, np.exp(1j * math.pi / 4)]))


def r_l(l: int) -> GateDef:
    """``R_l = diag(1, e^{2 pi i / 2**l})``."""
    if int(l) != l or l < 1:
        raise ValidationError(f"R_l needs a positive integer l, got {l}")
    return GateDef("rl", 1, np.diag([1, np.exp(2j * math.pi / 2 ** int(l))]), (l,))


def rotation(axis: str, angle: float) -> GateDef:
    """``R_a(angle) = cos(angle/2) I - i sin(angle/2) sigma_a``."""
    key = axis.upper()
    if key not in ("X", "Y", "Z"):
        raise ValidationError(f"Unknown rotation axis {axis!r}")
    matrix = math.cos(angle / 2) * PAULI_MATRICES["I"] - 1j * math.sin(angle / 2) * PAULI_MATRICES[key]
    return GateDef(f"r{key.lower()}", 1, matrix, (angle,))


def rotation_n(nx: float, ny: float, nz: float, angle: float) -> GateDef:
    """Rotation about the unit axis ``(nx, ny, nz)``."""
    if abs(math.sqrt(nx * nx + ny * ny + nz * nz) - 1.0) > UNIT_AXIS_EPS:
        raise ValidationError(f"Rotation axis ({nx}, {ny}, {nz}) is not a unit vector")
    n_sigma = nx * PAULI_MATRICES["X"] + ny * PAULI_MATRICES["Y"] + nz * PAULI_MATRICES["Z"]
    matrix = math.cos(angle / 2) * PAULI_MATRICES["I"] - 1j * math.sin(angle / 2) * n_sigma
    return GateDef("rn", 1, matrix, (nx, ny, nz, angle))


def sqrt_not() -> GateDef:
    """``R = H S H``, which squares to X."""
    h = hadamard().matrix
    return GateDef("sqrt_not", 1, h @ s().matrix @ h)


def controlled(u: GateDef, active: int = 1) -> GateDef:
    """Add a control wire on top of ``u``.

    With ``active=1`` the matrix is ``block_diag(I, U)``; with ``active=0`` the
    gate fires on a ``|0>`` control and the matrix is ``block_diag(U, I)``.
    """
    if active not in (0, 1):
        raise ValidationError(f"Control must be active on 0 or 1, got {active}")
    dim = 2**u.arity
    matrix = np.eye(2 * dim, dtype=complex)
    block = slice(dim, 2 * dim) if active == 1 else slice(0, dim)
    matrix[block, block] = u.matrix
    prefix = "c" if active == 1 else "c0"
    return GateDef(f"{prefix}{u.name}", u.arity + 1, matrix, u.params)


def _swap_matrix() -> DenseMatrix:
    matrix = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            matrix[2 * j + i, 2 * i + j] = 1
    return matrix


def named_gate(name: str) -> GateDef:
    """cnot, cz, swap, cswap or toffoli (alias ccnot)."""
    key = name.lower()
    if key == "cnot":
        return GateDef("cnot", 2, controlled(pauli("X")).matrix)
    if key == "cz":
        return GateDef("cz", 2, controlled(pauli("Z")).matrix)
    if key == "swap":
        return GateDef("swap", 2, _swap_matrix())
    if key == "cswap":
        return GateDef("cswap", 3, controlled(GateDef("swap", 2, _swap_matrix())).matrix)
    if key in ("toffoli", "ccnot"):
        return GateDef("ccnot", 3, controlled(controlled(pauli("X"))).matrix)
    raise ValidationError(f"Unknown gate name {name!r}")


def catalog() -> list[GateDef]:
    """One representative of every gate family, for exhaustive checks."""
    return [
        identity(),
        pauli("X"),
        pauli("Y"),
        pauli("Z"),
        hadamard(),
        phase(0.7),
        s(),
        t(),
        r_l(1),
        r_l(3),
        rotation("X", 0.4),
        rotation("Y", 1.3),
        rotation("Z", -2.1),
        rotation_n(0.6, 0.0, 0.8, 1.1),
        sqrt_not(),
        controlled(hadamard()),
        controlled(phase(0.3), active=0),
        named_gate("cnot"),
        named_gate("cz"),
        named_gate("swap"),
        named_gate("cswap"),
        named_gate("toffoli"),
    ]


@dataclass(frozen=True)
class Mnemonic:
    """A gate keyword of the circuit text format."""

    name: str
    arity: int
    param_kinds: tuple[str, ...]
    build: Callable[..., GateDef] = field(repr=False)


def _mnemonic_table() -> dict[str, Mnemonic]:
    entries = [
        Mnemonic("id", 1, (), identity),
        Mnemonic("x", 1, (), lambda: pauli("X")),
        Mnemonic("y", 1, (), lambda: pauli("Y")),
        Mnemonic("z", 1, (), lambda: pauli("Z")),
        Mnemonic("h", 1, (), hadamard),
        Mnemonic("s", 1, (), s),
        Mnemonic("t", 1, (), t),
        Mnemonic("p", 1, ("real",), phase),
        Mnemonic("rx", 1, ("real",), lambda angle: rotation("X", angle)),
        Mnemonic("ry", 1, ("real",), lambda angle: rotation("Y", angle)),
        Mnemonic("rz", 1, ("real",), lambda angle: rotation("Z", angle)),
        Mnemonic("rl", 1, ("int",), r_l),
        Mnemonic("cnot", 2, (), lambda: named_gate("cnot")),
        Mnemonic("cz", 2, (), lambda: named_gate("cz")),
        Mnemonic("swap", 2, (), lambda: named_gate("swap")),
        Mnemonic("cp", 2, ("real",), lambda phi: controlled(phase(phi))),
        Mnemonic("crl", 2, ("int",), lambda l: controlled(r_l(l))),
        Mnemonic(
            "cu",
            2,
            ("real", "real", "real", "real"),
            lambda nx, ny, nz, angle: controlled(rotation_n(nx, ny, nz, angle)),
        ),
        Mnemonic("cswap", 3, (), lambda: named_gate("cswap")),
        Mnemonic("ccnot", 3, (), lambda: named_gate("ccnot")),
    ]
    return {m.name: m for m in entries}


MNEMONICS = _mnemonic_table()
