"""Textbook algorithms built on the simulation core."""

from .oracles import BooleanOracle, OracleVerdict, deutsch, deutsch_jozsa, oracle_unitary
from .phase import hadamard_test, phase_estimate, swap_test
from .protocols import BellLabel, bell_circuit, bell_state, superdense, teleport
from .qft import iqft, qft, qft_matrix
from .shor import Shor15Result, period_classical, shor15

__all__ = [
    "BellLabel",
    "BooleanOracle",
    "OracleVerdict",
    "Shor15Result",
    "bell_circuit",
    "bell_state",
    "deutsch",
    "deutsch_jozsa",
    "hadamard_test",
    "iqft",
    "oracle_unitary",
    "period_classical",
    "phase_estimate",
    "qft",
    "qft_matrix",
    "shor15",
    "superdense",
    "swap_test",
    "teleport",
]
