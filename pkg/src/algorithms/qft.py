"""Quantum Fourier transform as a circuit and as a dense reference matrix."""

import math

import numpy as np

from ..errors import ValidationError
from ..sim.circuit import Circuit, inverse
from ..sim.gates import controlled, hadamard, named_gate, r_l
from ..sim.linalg import DenseMatrix


def _check_width(n: int) -> None:
    if n < 1:
        raise ValidationError(f"QFT needs at least one qubit, got {n}")


def qft(n: int) -> Circuit:
    """H plus controlled-R_l ladder on each wire, then SWAPs reversing the wire order."""
    _check_width(n)
    circuit = Circuit(n)
    h = hadamard()
    for j in range(n):
        circuit.add(h, j)
        for l in range(2, n - j + 1):
            # control on wire j+l-1, phase lands on wire j
            circuit.add(controlled(r_l(l)), j + l - 1, j)
    swap = named_gate("swap")
    for j in range(n // 2):
        circuit.add(swap, j, n - 1 - j)
    return circuit


def iqft(n: int) -> Circuit:
    return inverse(qft(n))


def qft_matrix(n: int) -> DenseMatrix:
    """``QFT[y, x] = exp(2 pi i x y / 2**n) / sqrt(2**n)``."""
    _check_width(n)
    dim = 2**n
    grid = np.arange(dim)
    return np.exp(2j * math.pi * np.outer(grid, grid) / dim) / math.sqrt(dim)
