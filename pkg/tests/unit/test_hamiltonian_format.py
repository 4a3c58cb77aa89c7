"""Unit tests for the Pauli-sum text format."""

import pytest

from src.errors import CircuitParseError
from src.io.hamiltonian_format import parse_hamiltonian


class TestParseHamiltonian:
    def test_terms(self):
        h = parse_hamiltonian("# transverse field\n1.0 X\n-0.5 Z  # bias\n")
        assert h.n == 1
        assert h.coefficients() == {"X": 1.0, "Z": -0.5}

    def test_multi_qubit(self):
        h = parse_hamiltonian("0.25 ZZI\n.5 IXX\n")
        assert h.n == 3
        assert [str(p) for _, p in h.terms] == ["ZZI", "IXX"]

    @pytest.mark.parametrize(
        "text,kind,line",
        [
            ("", "empty-hamiltonian", 1),
            ("# only a comment\n", "empty-hamiltonian", 1),
            ("1.0\n", "arity-mismatch", 1),
            ("1.0 X Z\n", "arity-mismatch", 1),
            ("one X\n", "malformed-number", 1),
            ("1e999 X\n", "malformed-number", 1),
            ("1.0 X\n1.0 XA\n", "invalid-pauli", 2),
            ("1.0 xz\n", "invalid-pauli", 1),
            ("1.0 X\n2.0 ZZ\n", "length-mismatch", 2),
            ("1.0 " + "X" * 11 + "\n", "invalid-pauli", 1),
        ],
    )
    def test_diagnostics(self, text, kind, line):
        with pytest.raises(CircuitParseError) as info:
            parse_hamiltonian(text)
        assert (info.value.kind, info.value.line) == (kind, line)

    def test_column_points_at_word(self):
        with pytest.raises(CircuitParseError) as info:
            parse_hamiltonian("  0.5 QQ\n")
        assert info.value.column == 7
