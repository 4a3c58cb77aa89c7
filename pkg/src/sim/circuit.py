"""Circuit IR and the gate-application kernel.

The kernel never builds a 2**n x 2**n matrix. For a k-qubit gate it gathers
the amplitudes of every configuration of the n-k spectator bits into a
``(2**k, 2**(n-k))`` block, multiplies by the small gate matrix, and scatters
the result back in place. Index tables are cached up to 14 qubits; larger
registers contract the gate against the target axes of the reshaped vector.
:func:`embed_unitary` is the dense reference both paths are tested against.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
import numpy.typing as npt

from ..errors import DimensionError, ValidationError
from .gates import GateDef, hadamard
from .linalg import DenseMatrix
from .state import StateVector

logger = logging.getLogger(__name__)

MAX_DENSE_QUBITS = 12
CACHED_TABLE_QUBITS = 14


@dataclass(frozen=True)
class CircuitOp:
    """A gate applied to ordered target wires (control wires first)."""

    gate: GateDef
    targets: tuple[int, ...]

    def __post_init__(self):
        targets = tuple(int(q) for q in self.targets)
        object.__setattr__(self, "targets", targets)
        if len(targets) != self.gate.arity:
            raise ValidationError(
                f"Gate {self.gate.name!r} acts on {self.gate.arity} qubits, "
                f"got {len(targets)} targets"
            )
        if len(set(targets)) != len(targets):
            raise ValidationError(f"Duplicate targets {targets} for gate {self.gate.name!r}")
        if any(q < 0 for q in targets):
            raise ValidationError(f"Negative qubit index in {targets}")

    def check(self, num_qubits: int) -> None:
        """Raise if any target is outside ``[0, num_qubits)``."""
        for q in self.targets:
            if q >= num_qubits:
                raise ValidationError(
                    f"Qubit {q} out of range for {num_qubits}-qubit register "
                    f"(gate {self.gate.name!r})"
                )


@dataclass
class Circuit:
    """Ordered gate applications; ops run first-to-last, left-to-right in a diagram."""

    num_qubits: int
    ops: list[CircuitOp] = field(default_factory=list)

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValidationError(f"A circuit needs at least one qubit, got {self.num_qubits}")
        for op in self.ops:
            op.check(self.num_qubits)

    def add(self, gate: GateDef, *targets: int) -> "Circuit":
        """Append ``gate`` on ``targets`` and return self for chaining."""
        op = CircuitOp(gate, tuple(targets))
        op.check(self.num_qubits)
        self.ops.append(op)
        return self

    def extend(self, other: "Circuit", offset: int = 0) -> "Circuit":
        """Append every op of ``other``, shifting its wires by ``offset``."""
        for op in other.ops:
            self.add(op.gate, *(q + offset for q in op.targets))
        return self

    def __len__(self) -> int:
        return len(self.ops)


def hadamard_layer(num_qubits: int, qubits: Iterable[int]) -> Circuit:
    """A circuit with one H on each listed wire."""
    circuit = Circuit(num_qubits)
    h = hadamard()
    for q in qubits:
        circuit.add(h, q)
    return circuit


def _build_gather_indices(num_qubits: int, targets: tuple[int, ...]) -> npt.NDArray[np.int64]:
    """Index table of shape ``(2**k, 2**(n-k))`` for a gate on ``targets``.

    Row r lists the basis indices whose target bits spell r (targets[0] most
    significant); column c is one configuration of the spectator bits.
    """
    k = len(targets)
    positions = [num_qubits - 1 - q for q in targets]
    # spread a counter over the spectator bits by inserting zeros at target positions
    bases = np.arange(2 ** (num_qubits - k), dtype=np.int64)
    for p in sorted(positions):
        low = bases & ((1 << p) - 1)
        bases = ((bases >> p) << (p + 1)) | low
    offsets = np.zeros(2**k, dtype=np.int64)
    for r in range(2**k):
        for j, p in enumerate(positions):
            if (r >> (k - 1 - j)) & 1:
                offsets[r] |= 1 << p
    table = offsets[:, None] | bases[None, :]
    table.setflags(write=False)
    return table


_cached_gather_indices = lru_cache(maxsize=256)(_build_gather_indices)


def _apply_in_place(amplitudes: npt.NDArray[np.complex128], num_qubits: int, op: CircuitOp) -> None:
    # index tables above this size would dominate memory, so contract instead
    if num_qubits > CACHED_TABLE_QUBITS:
        _apply_by_contraction(amplitudes, num_qubits, op)
        return
    table = _cached_gather_indices(num_qubits, op.targets)
    amplitudes[table] = op.gate.matrix @ amplitudes[table]


def _apply_by_contraction(
    amplitudes: npt.NDArray[np.complex128], num_qubits: int, op: CircuitOp
) -> None:
    """Same result as the gather path, contracting the gate against the target axes."""
    k = op.gate.arity
    psi = amplitudes.reshape([2] * num_qubits)
    u = op.gate.matrix.reshape([2] * (2 * k))
    out = np.tensordot(u, psi, axes=(list(range(k, 2 * k)), list(op.targets)))
    # tensordot leaves the gate's output axes first
    out = np.moveaxis(out, list(range(k)), list(op.targets))
    amplitudes[:] = out.reshape(-1)


def apply_gate(state: StateVector, op: CircuitOp) -> StateVector:
    """Return ``U |state>`` with ``U`` acting on ``op.targets``.

    Raises:
        ValidationError: If a target is out of range.
    """
    op.check(state.num_qubits)
    amplitudes = np.array(state.amplitudes, dtype=complex)
    _apply_in_place(amplitudes, state.num_qubits, op)
    return StateVector(state.num_qubits, amplitudes)


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Run every op of ``circuit`` on ``state``."""
    if circuit.num_qubits != state.num_qubits:
        raise ValidationError(
            f"Circuit has {circuit.num_qubits} qubits but state has {state.num_qubits}"
        )
    amplitudes = np.array(state.amplitudes, dtype=complex)
    for op in circuit.ops:
        op.check(state.num_qubits)
        _apply_in_place(amplitudes, state.num_qubits, op)
    logger.debug(f"Applied {len(circuit.ops)} ops to {state.num_qubits} qubits")
    return StateVector(state.num_qubits, amplitudes)


def _guard_dense(num_qubits: int) -> None:
    if num_qubits > MAX_DENSE_QUBITS:
        raise DimensionError(
            f"Dense {num_qubits}-qubit matrices are refused (limit {MAX_DENSE_QUBITS})"
        )


def embed_unitary(op: CircuitOp, num_qubits: int) -> DenseMatrix:
    """Dense ``2**n`` unitary of ``op`` with identity on the other wires.

    Built as ``U (x) I`` on the wire order ``targets + rest`` and then permuted
    back to natural wire order.
    """
    _guard_dense(num_qubits)
    op.check(num_qubits)
    k = op.gate.arity
    rest = [q for q in range(num_qubits) if q not in op.targets]
    dense = np.kron(op.gate.matrix, np.eye(2 ** len(rest), dtype=complex))
    # axes of the 2n-index tensor: outputs in `order`, then inputs in `order`
    order = list(op.targets) + rest
    tensor_form = dense.reshape([2] * (2 * num_qubits))
    inverse = [order.index(q) for q in range(num_qubits)]
    perm = inverse + [num_qubits + i for i in inverse]
    logger.debug(f"Embedded {k}-qubit gate {op.gate.name!r} into {num_qubits} qubits")
    return np.transpose(tensor_form, perm).reshape(2**num_qubits, 2**num_qubits)


def circuit_unitary(circuit: Circuit) -> DenseMatrix:
    """Ordered product of the embedded op matrices (later ops on the left)."""
    _guard_dense(circuit.num_qubits)
    total = np.eye(2**circuit.num_qubits, dtype=complex)
    for op in circuit.ops:
        total = embed_unitary(op, circuit.num_qubits) @ total
    return total


def inverse(circuit: Circuit) -> Circuit:
    """Reverse the op order and dagger every gate."""
    return Circuit(
        circuit.num_qubits,
        [CircuitOp(op.gate.dagger(), op.targets) for op in reversed(circuit.ops)],
    )


def random_circuit(
    num_qubits: int, depth: int, generator: np.random.Generator, gates: Sequence[GateDef]
) -> Circuit:
    """Random ops drawn from ``gates`` on random distinct wires."""
    circuit = Circuit(num_qubits)
    candidates = [g for g in gates if g.arity <= num_qubits]
    for _ in range(depth):
        gate = candidates[int(generator.integers(len(candidates)))]
        targets = generator.choice(num_qubits, size=gate.arity, replace=False)
        circuit.add(gate, *(int(q) for q in targets))
    return circuit
