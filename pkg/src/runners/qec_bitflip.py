"""Three-qubit bit-flip code pipeline."""

import argparse

import numpy as np

from ..errors import DimensionError, UsageError
from ..qec.bitflip import bitflip_logical_error, run_bitflip_pipeline
from ..sim.state import random_state
from .base_runner import BaseRunner, RunContext, RunOutcome

FLIP_CHOICES = ("none", "0", "1", "2", "01", "02", "12")


class BitflipRunner(BaseRunner):
    name = "qec_bitflip"
    command = "qec-bitflip"
    description = "Encode random qubits, flip wires, correct, decode and report fidelity"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--flip", choices=FLIP_CHOICES, default="none", help="wires to flip; two wires defeat the code")
        parser.add_argument("--trials", type=int, default=100)
        parser.add_argument("--p", type=float, default=None, help="also evaluate the logical error rate at this flip probability")

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        if args.trials < 1:
            raise UsageError(f"--trials must be >= 1, got {args.trials}")
        flips = () if args.flip == "none" else tuple(int(c) for c in args.flip)
        generator = np.random.default_rng(context.seed)
        fidelities = []
        syndrome = None
        for _ in range(args.trials):
            run = run_bitflip_pipeline(random_state(1, generator), flips)
            fidelities.append(run.fidelity)
            syndrome = str(run.syndrome)
        min_fidelity = min(fidelities)
        result = {
            "flip": args.flip,
            "trials": args.trials,
            "syndrome": syndrome,
            "min_fidelity": min_fidelity,
            "all_recovered": min_fidelity >= 1 - context.config.tolerance,
        }
        if args.p is not None:
            if not 0 <= args.p <= 1:
                raise UsageError(f"--p must lie in [0, 1], got {args.p}")
            if context.config.max_density_qubits < 3:
                raise DimensionError("The logical error rate needs 3-qubit density matrices")
            result["p"] = args.p
            result["logical_error"] = bitflip_logical_error(args.p)
            result["logical_error_formula"] = 3 * args.p**2 - 2 * args.p**3
        return RunOutcome(result=result, num_qubits=5)
