"""Superdense coding of two classical bits."""

import argparse
import re

from ..algorithms.protocols import superdense, superdense_state
from ..errors import UsageError
from ..sim.measure import probabilities
from .base_runner import BaseRunner, RunContext, RunOutcome


class SuperdenseRunner(BaseRunner):
    name = "superdense"
    command = "superdense"
    description = "Send two classical bits through one qubit of a Bell pair"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--bits", required=True, help="two bits b1b2, e.g. 10")

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        if not re.fullmatch(r"[01]{2}", args.bits):
            raise UsageError(f"--bits must be two characters of 0/1, got {args.bits!r}")
        b1, b2 = int(args.bits[0]), int(args.bits[1])
        received = superdense(b1, b2)
        return RunOutcome(
            result={"sent": args.bits, "received": f"{received[0]}{received[1]}"},
            probabilities=probabilities(superdense_state(b1, b2)).tolist(),
            num_qubits=2,
        )
