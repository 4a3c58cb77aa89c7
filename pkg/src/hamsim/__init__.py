"""Hamiltonian simulation with Pauli-sum Hamiltonians."""

from .evolution import exact_evolution, string_exp_circuit, trotter_error, trotter_evolve, trotter_slope
from .pauli import PauliString, PauliSumHamiltonian, pauli_string_matrix

__all__ = [
    "PauliString",
    "PauliSumHamiltonian",
    "exact_evolution",
    "pauli_string_matrix",
    "string_exp_circuit",
    "trotter_error",
    "trotter_evolve",
    "trotter_slope",
]
