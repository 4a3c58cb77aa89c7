"""Text formats for circuits and Hamiltonians, and report emitters."""

from .circuit_format import CircuitFile, Statement, parse_circuit, to_circuit, unparse
from .hamiltonian_format import parse_hamiltonian
from .report import RunReport

__all__ = [
    "CircuitFile",
    "RunReport",
    "Statement",
    "parse_circuit",
    "parse_hamiltonian",
    "to_circuit",
    "unparse",
]
