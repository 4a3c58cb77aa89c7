"""Deutsch's algorithm on a one-bit truth table."""

import argparse

from ..algorithms.oracles import BooleanOracle, deutsch, zero_probability
from ..errors import UsageError, ValidationError
from .base_runner import BaseRunner, RunContext, RunOutcome


class DeutschRunner(BaseRunner):
    name = "deutsch"
    command = "deutsch"
    description = "Decide constant vs balanced for f: {0,1} -> {0,1} with one query"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--oracle", required=True, help="truth table f(0)f(1), e.g. 01")

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        try:
            f = BooleanOracle.from_bits(args.oracle)
        except ValidationError as e:
            raise UsageError(str(e)) from None
        if f.n != 1:
            raise UsageError(f"deutsch takes a 2-entry table, got {len(f.table)} entries")
        verdict = deutsch(f)
        return RunOutcome(
            result={"oracle": f.bits(), "verdict": verdict, "p_zero": zero_probability(f)},
            num_qubits=2,
        )
