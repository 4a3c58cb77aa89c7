"""Line-oriented circuit text format.

::

    # Bell pair
    qubits 2
    h 0
    cnot 0 1
    measure 0 1

``#`` starts a comment. The first significant line is ``qubits <n>``. Each
statement is a mnemonic, its qubit indices, then its numeric parameters.
``oracle <bits> [indices]`` embeds an XOR oracle whose truth table is
``bits``; without indices it acts on wires ``0..m``. ``measure`` lines may
only appear after the last gate. Reals are plain decimal literals with no
expression evaluation.

Every failure raises :class:`CircuitParseError` with a stable ``kind``:
missing-header, bad-header, unknown-mnemonic, arity-mismatch,
index-out-of-range, duplicate-qubit, malformed-number, invalid-parameter,
invalid-oracle, measure-not-terminal. Files that are not UTF-8 fail with
invalid-encoding at the first bad byte.
"""

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Union

from ..algorithms.oracles import BooleanOracle, oracle_unitary
from ..errors import CircuitParseError, ValidationError
from ..sim.circuit import Circuit
from ..sim.gates import MNEMONICS, Mnemonic

logger = logging.getLogger(__name__)

MAX_FILE_QUBITS = 24
MAX_FILE_ORACLE_INPUTS = 8
MAX_RL_INDEX = 64

TOKEN = re.compile(r"\S+")
INTEGER = re.compile(r"[+-]?[0-9]+")
INDEX = re.compile(r"[0-9]+")
REAL = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")
BITS = re.compile(r"[01]+")

Param = Union[float, int, str]


@dataclass(frozen=True)
class Statement:
    """One gate, oracle or measure line; positions are ignored by equality."""

    mnemonic: str
    qubits: tuple[int, ...]
    params: tuple[Param, ...] = ()
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CircuitFile:
    num_qubits: int
    statements: tuple[Statement, ...]

    @property
    def gates(self) -> list[Statement]:
        return [st for st in self.statements if st.mnemonic != "measure"]

    @property
    def measured(self) -> tuple[int, ...]:
        """Measured wires in first-mention order."""
        return tuple(q for st in self.statements if st.mnemonic == "measure" for q in st.qubits)


@dataclass
class _Token:
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[list[_Token]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [_Token(m.group(), number, m.start() + 1) for m in TOKEN.finditer(content)]
        if tokens:
            lines.append(tokens)
    return lines


def _fail(kind: str, message: str, token: _Token) -> CircuitParseError:
    return CircuitParseError(kind, message, token.line, token.column)


def decode_source(data: bytes) -> str:
    """Decode UTF-8 file contents; a bad byte is reported at its line and column."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        line_start = data.rfind(b"\n", 0, e.start) + 1
        column = len(data[line_start : e.start].decode("utf-8", errors="replace")) + 1
        raise CircuitParseError(
            "invalid-encoding", f"byte 0x{data[e.start]:02x} is not valid UTF-8", line, column
        ) from None


def _parse_int(token: _Token, pattern: re.Pattern = INTEGER) -> int:
    if not pattern.fullmatch(token.text):
        raise _fail("malformed-number", f"expected an integer, got {token.text!r}", token)
    try:
        return int(token.text)
    except ValueError:
        raise _fail("malformed-number", f"integer {token.text[:20]!r}... is too long", token) from None


def _parse_real(token: _Token) -> float:
    if not REAL.fullmatch(token.text):
        raise _fail("malformed-number", f"expected a decimal number, got {token.text!r}", token)
    value = float(token.text)
    if not math.isfinite(value):
        raise _fail("malformed-number", f"{token.text!r} is not finite", token)
    return value


def _parse_header(tokens: list[_Token]) -> int:
    head = tokens[0]
    if head.text != "qubits":
        raise _fail("missing-header", "first statement must be 'qubits <n>'", head)
    if len(tokens) != 2:
        raise _fail("bad-header", "header takes exactly one qubit count", head)
    n = _parse_int(tokens[1], INDEX)
    if not 1 <= n <= MAX_FILE_QUBITS:
        raise _fail("bad-header", f"qubit count must be in [1, {MAX_FILE_QUBITS}], got {n}", tokens[1])
    return n


def _parse_qubits(tokens: list[_Token], n: int) -> tuple[int, ...]:
    qubits = []
    for token in tokens:
        q = _parse_int(token, INDEX)
        if q >= n:
            raise _fail("index-out-of-range", f"qubit {q} out of range for {n} qubits", token)
        if q in qubits:
            raise _fail("duplicate-qubit", f"qubit {q} listed twice", token)
        qubits.append(q)
    return tuple(qubits)


def _parse_gate(mnemonic: Mnemonic, tokens: list[_Token], n: int) -> Statement:
    head, args = tokens[0], tokens[1:]
    expected = mnemonic.arity + len(mnemonic.param_kinds)
    if len(args) != expected:
        raise _fail(
            "arity-mismatch",
            f"'{mnemonic.name}' takes {mnemonic.arity} qubit(s) and {len(mnemonic.param_kinds)} parameter(s), "
            f"got {len(args)} argument(s)",
            head,
        )
    qubits = _parse_qubits(args[: mnemonic.arity], n)
    params: list[Param] = []
    for kind, token in zip(mnemonic.param_kinds, args[mnemonic.arity :]):
        if kind == "int":
            value = _parse_int(token)
            if mnemonic.name in ("rl", "crl") and not 1 <= value <= MAX_RL_INDEX:
                raise _fail("invalid-parameter", f"l must be in [1, {MAX_RL_INDEX}], got {value}", token)
            params.append(value)
        else:
            params.append(_parse_real(token))
    try:
        mnemonic.build(*params)
    except ValidationError as e:
        raise _fail("invalid-parameter", str(e), head) from None
    return Statement(mnemonic.name, qubits, tuple(params), head.line, head.column)


def _parse_oracle(tokens: list[_Token], n: int) -> Statement:
    head, args = tokens[0], tokens[1:]
    if not args:
        raise _fail("arity-mismatch", "'oracle' needs a truth table", head)
    table = args[0]
    size = len(table.text)
    if not BITS.fullmatch(table.text) or size < 2 or size & (size - 1):
        raise _fail("invalid-oracle", "truth table must be 2**m characters of 0/1", table)
    m = size.bit_length() - 1
    if m > MAX_FILE_ORACLE_INPUTS:
        raise _fail("invalid-oracle", f"oracles take at most {MAX_FILE_ORACLE_INPUTS} inputs", table)
    if len(args) == 1:
        if m + 1 > n:
            raise _fail("invalid-oracle", f"a {m}-input oracle needs {m + 1} qubits", table)
        qubits = tuple(range(m + 1))
    elif len(args) - 1 != m + 1:
        raise _fail("arity-mismatch", f"a {m}-input oracle acts on {m + 1} qubits", head)
    else:
        qubits = _parse_qubits(args[1:], n)
    return Statement("oracle", qubits, (table.text,), head.line, head.column)


def _parse_measure(tokens: list[_Token], n: int, seen: set[int]) -> Statement:
    head, args = tokens[0], tokens[1:]
    if not args:
        raise _fail("arity-mismatch", "'measure' needs at least one qubit", head)
    qubits = _parse_qubits(args, n)
    for token, q in zip(args, qubits):
        if q in seen:
            raise _fail("duplicate-qubit", f"qubit {q} is already measured", token)
    seen.update(qubits)
    return Statement("measure", qubits, (), head.line, head.column)


def parse_circuit(text: str) -> CircuitFile:
    """Parse circuit text.

    Raises:
        CircuitParseError: With line and column of the first problem.
    """
    lines = _tokenize(text)
    if not lines:
        raise CircuitParseError("missing-header", "empty input; expected 'qubits <n>'", 1, 1)
    n = _parse_header(lines[0])
    statements: list[Statement] = []
    measured: set[int] = set()
    for tokens in lines[1:]:
        head = tokens[0]
        keyword = head.text
        if keyword == "measure":
            statements.append(_parse_measure(tokens, n, measured))
            continue
        if measured:
            raise _fail("measure-not-terminal", f"'{keyword}' after a measure statement", head)
        if keyword == "qubits":
            raise _fail("bad-header", "the header may appear only once", head)
        if keyword == "oracle":
            statements.append(_parse_oracle(tokens, n))
        elif keyword in MNEMONICS:
            statements.append(_parse_gate(MNEMONICS[keyword], tokens, n))
        else:
            raise _fail("unknown-mnemonic", f"unknown mnemonic {keyword[:40]!r}", head)
    logger.debug(f"Parsed circuit: {n} qubits, {len(statements)} statements")
    return CircuitFile(n, tuple(statements))


def _format_param(value: Param) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def unparse(circuit_file: CircuitFile) -> str:
    """Canonical text; parsing it yields an equal :class:`CircuitFile`."""
    lines = [f"qubits {circuit_file.num_qubits}"]
    for st in circuit_file.statements:
        if st.mnemonic == "oracle":
            parts = [st.mnemonic, str(st.params[0]), *map(str, st.qubits)]
        else:
            parts = [st.mnemonic, *map(str, st.qubits), *map(_format_param, st.params)]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def to_circuit(circuit_file: CircuitFile) -> Circuit:
    """Gate statements as a :class:`Circuit`; measure statements are left to the caller."""
    circuit = Circuit(circuit_file.num_qubits)
    for st in circuit_file.gates:
        if st.mnemonic == "oracle":
            gate = oracle_unitary(BooleanOracle.from_bits(str(st.params[0])))
        else:
            gate = MNEMONICS[st.mnemonic].build(*st.params)
        circuit.add(gate, *st.qubits)
    return circuit
