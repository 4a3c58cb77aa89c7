"""Pauli-sum Hamiltonian text format: one ``<coefficient> <LETTERS>`` term per line."""

import logging
import math
import re

from ..errors import CircuitParseError
from ..hamsim.pauli import MAX_PAULI_QUBITS, PauliString, PauliSumHamiltonian

logger = logging.getLogger(__name__)

REAL = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")
LETTERS = re.compile(r"[IXYZ]+")


def parse_hamiltonian(text: str) -> PauliSumHamiltonian:
    """Parse lines such as ``0.5 ZZI``; ``#`` starts a comment.

    Raises:
        CircuitParseError: kinds malformed-number, invalid-pauli, length-mismatch,
            arity-mismatch, empty-hamiltonian.
    """
    terms: list[tuple[float, PauliString]] = []
    width = None
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", content)]
        if not tokens:
            continue
        if len(tokens) != 2:
            raise CircuitParseError("arity-mismatch", "expected '<coefficient> <LETTERS>'", number, tokens[0][1])
        (coeff_text, coeff_col), (word, word_col) = tokens
        if not REAL.fullmatch(coeff_text) or not math.isfinite(float(coeff_text)):
            raise CircuitParseError("malformed-number", f"bad coefficient {coeff_text!r}", number, coeff_col)
        if not LETTERS.fullmatch(word) or len(word) > MAX_PAULI_QUBITS:
            raise CircuitParseError(
                "invalid-pauli", f"{word!r} is not a Pauli string of at most {MAX_PAULI_QUBITS} letters", number, word_col
            )
        if width is not None and len(word) != width:
            raise CircuitParseError("length-mismatch", f"expected {width} letters, got {len(word)}", number, word_col)
        width = len(word)
        terms.append((float(coeff_text), PauliString(word)))
    if not terms:
        raise CircuitParseError("empty-hamiltonian", "no terms found", 1, 1)
    logger.debug(f"Parsed Hamiltonian with {len(terms)} terms on {width} qubits")
    return PauliSumHamiltonian(width, tuple(terms))
