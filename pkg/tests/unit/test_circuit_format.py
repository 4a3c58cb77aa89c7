"""Unit tests for the circuit text format."""

import math

import numpy as np
import pytest

from src.errors import CircuitParseError
from src.io.circuit_format import Statement, decode_source, parse_circuit, to_circuit, unparse
from src.sim.circuit import apply_circuit
from src.sim.gates import MNEMONICS
from src.sim.state import basis_state

BELL = """\
# Bell pair
qubits 2
h 0
cnot 0 1   # entangle
measure 0 1
"""


def _kind(text: str) -> CircuitParseError:
    with pytest.raises(CircuitParseError) as info:
        parse_circuit(text)
    return info.value


class TestParse:
    def test_bell(self):
        parsed = parse_circuit(BELL)
        assert parsed.num_qubits == 2
        assert parsed.gates == [Statement("h", (0,)), Statement("cnot", (0, 1))]
        assert parsed.measured == (0, 1)

    def test_positions_recorded(self):
        parsed = parse_circuit(BELL)
        assert (parsed.statements[1].line, parsed.statements[1].column) == (4, 1)

    def test_parameters(self):
        parsed = parse_circuit("qubits 2\nrx 0 1.5\nrl 1 3\ncu 0 1 0 0 1 -2.5e-1\n")
        assert parsed.statements[0].params == (1.5,)
        assert parsed.statements[1].params == (3,)
        assert parsed.statements[2].params == (0.0, 0.0, 1.0, -0.25)

    def test_oracle_default_wires(self):
        parsed = parse_circuit("qubits 3\noracle 0110\n")
        assert parsed.statements[0] == Statement("oracle", (0, 1, 2), ("0110",))

    def test_oracle_explicit_wires(self):
        parsed = parse_circuit("qubits 4\noracle 01 3 0\n")
        assert parsed.statements[0].qubits == (3, 0)

    def test_every_mnemonic_parses(self):
        for name, mnemonic in MNEMONICS.items():
            qubits = " ".join(str(q) for q in range(mnemonic.arity))
            params = " ".join("1" if kind == "int" else "0.5" for kind in mnemonic.param_kinds)
            if name == "cu":
                params = "1 0 0 0.5"
            parsed = parse_circuit(f"qubits 3\n{name} {qubits} {params}\n")
            assert parsed.statements[0].mnemonic == name

    def test_measure_order_is_first_mention(self):
        parsed = parse_circuit("qubits 3\nh 0\nmeasure 2\nmeasure 0\n")
        assert parsed.measured == (2, 0)


class TestDiagnostics:
    def test_empty(self):
        error = _kind("# nothing\n\n")
        assert error.kind == "missing-header"

    def test_gate_before_header(self):
        error = _kind("h 0\nqubits 1\n")
        assert (error.kind, error.line, error.column) == ("missing-header", 1, 1)

    @pytest.mark.parametrize("text", ["qubits\n", "qubits 0\n", "qubits 25\n", "qubits 2 3\n", "qubits 1\nqubits 1\n"])
    def test_bad_header(self, text):
        assert _kind(text).kind == "bad-header"

    def test_unknown_mnemonic(self):
        error = _kind("qubits 1\n  foo 0\n")
        assert (error.kind, error.line, error.column) == ("unknown-mnemonic", 2, 3)

    def test_arity_mismatch(self):
        assert _kind("qubits 2\ncnot 0\n").kind == "arity-mismatch"
        assert _kind("qubits 1\nrx 0\n").kind == "arity-mismatch"

    def test_index_out_of_range(self):
        error = _kind("qubits 2\nh 0\ncnot 0 2\n")
        assert (error.kind, error.line, error.column) == ("index-out-of-range", 3, 8)

    def test_duplicate_qubit(self):
        assert _kind("qubits 2\ncnot 1 1\n").kind == "duplicate-qubit"
        assert _kind("qubits 2\nmeasure 0\nmeasure 0\n").kind == "duplicate-qubit"

    @pytest.mark.parametrize("token", ["pi", "1/2", "1e999", "nan", "0x10", "1..2"])
    def test_malformed_number(self, token):
        assert _kind(f"qubits 1\nrz 0 {token}\n").kind == "malformed-number"

    def test_negative_index_is_malformed(self):
        assert _kind("qubits 2\nh -1\n").kind == "malformed-number"

    def test_invalid_parameter(self):
        assert _kind("qubits 1\nrl 0 0\n").kind == "invalid-parameter"
        assert _kind("qubits 2\ncu 0 1 1 1 0 0.5\n").kind == "invalid-parameter"

    @pytest.mark.parametrize("table", ["011", "01x0", "0", "0" * 1024])
    def test_invalid_oracle(self, table):
        assert _kind(f"qubits 12\noracle {table}\n").kind == "invalid-oracle"

    def test_oracle_needs_room(self):
        assert _kind("qubits 2\noracle 0110\n").kind == "invalid-oracle"

    def test_measure_not_terminal(self):
        error = _kind("qubits 2\nmeasure 0\nh 1\n")
        assert (error.kind, error.line) == ("measure-not-terminal", 3)

    def test_message_carries_position(self):
        assert str(_kind("qubits 1\nfoo 0\n")).startswith("2:1: unknown-mnemonic")


class TestDecodeSource:
    def test_utf8_passes_through(self):
        assert decode_source("qubits 1\nh 0  # \u00e9\n".encode("utf-8")) == "qubits 1\nh 0  # \u00e9\n"

    @pytest.mark.parametrize(
        "data,line,column",
        [
            (b"\xff", 1, 1),
            (b"qubits 2\nh \xff\n", 2, 3),
            (b"qubits 1\n# caf\xc3\xa9 \xfe\n", 2, 8),
            (b"qubits 1\n\n\nx 0\xc3", 4, 4),
        ],
    )
    def test_bad_byte_position(self, data, line, column):
        with pytest.raises(CircuitParseError) as info:
            decode_source(data)
        assert (info.value.kind, info.value.line, info.value.column) == ("invalid-encoding", line, column)


class TestUnparse:
    def test_round_trip(self):
        parsed = parse_circuit("qubits 3\nh 0\np 1 0.1\ncrl 0 2 4\noracle 01 2 1\nmeasure 2\n")
        assert parse_circuit(unparse(parsed)) == parsed

    def test_canonical_text(self):
        assert unparse(parse_circuit(BELL)) == "qubits 2\nh 0\ncnot 0 1\nmeasure 0 1\n"

    def test_reals_keep_precision(self):
        parsed = parse_circuit(f"qubits 1\nrz 0 {math.pi!r}\n")
        assert parse_circuit(unparse(parsed)).statements[0].params == (math.pi,)


class TestToCircuit:
    def test_bell_state(self):
        state = apply_circuit(basis_state(2, 0), to_circuit(parse_circuit(BELL)))
        assert np.allclose(state.amplitudes, [1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)])

    def test_oracle_flips_target(self):
        circuit = to_circuit(parse_circuit("qubits 2\nx 0\noracle 01\n"))
        state = apply_circuit(basis_state(2, 0), circuit)
        assert np.allclose(state.amplitudes, [0, 0, 0, 1])

    def test_measure_lines_skipped(self):
        assert len(to_circuit(parse_circuit(BELL))) == 2
