"""Trotterized evolution of a Pauli-sum Hamiltonian from a file."""

import argparse
from pathlib import Path

import numpy as np

from ..errors import DimensionError, UsageError
from ..hamsim.evolution import exact_evolution, trotter_evolve
from ..io.circuit_format import decode_source
from ..io.hamiltonian_format import parse_hamiltonian
from ..sim.measure import probabilities
from ..sim.state import basis_state
from .base_runner import BaseRunner, RunContext, RunOutcome


class TrotterRunner(BaseRunner):
    name = "trotter"
    command = "trotter"
    description = "First-order Trotter evolution compared against exact evolution"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--hamiltonian", required=True, help="file of '<coeff> <LETTERS>' lines")
        parser.add_argument("--t", type=float, default=1.0)
        parser.add_argument("--steps", type=int, default=64)
        parser.add_argument("--initial", type=int, default=0, help="initial basis label")

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        path = Path(args.hamiltonian)
        try:
            data = path.read_bytes()
        except OSError as e:
            raise UsageError(f"Cannot read {path}: {e.strerror}") from None
        h = parse_hamiltonian(decode_source(data))
        if h.n > context.config.max_dense_qubits:
            raise DimensionError(f"{h.n}-qubit Hamiltonian exceeds the dense limit {context.config.max_dense_qubits}")
        if args.steps < 1:
            raise UsageError(f"--steps must be >= 1, got {args.steps}")
        if not 0 <= args.initial < 2**h.n:
            raise UsageError(f"--initial {args.initial} out of range for {h.n} qubits")
        initial = basis_state(h.n, args.initial)
        approx = trotter_evolve(h, args.t, args.steps, initial)
        exact = exact_evolution(h, args.t, initial)
        return RunOutcome(
            result={
                "terms": len(h.terms),
                "t": args.t,
                "steps": args.steps,
                "error": float(np.linalg.norm(approx.amplitudes - exact.amplitudes)),
                "norm": approx.norm(),
            },
            probabilities=probabilities(approx).tolist(),
            num_qubits=h.n,
        )
