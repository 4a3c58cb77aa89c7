"""Deutsch-Jozsa on an n-bit truth table."""

import argparse

from ..algorithms.oracles import BooleanOracle, deutsch_jozsa, deutsch_jozsa_sample, zero_probability
from ..errors import UsageError, ValidationError
from ..sim.measure import ShotConfig
from .base_runner import BaseRunner, RunContext, RunOutcome, positive_int


class DeutschJozsaRunner(BaseRunner):
    name = "dj"
    command = "dj"
    description = "Decide constant vs balanced for an n-bit promise function"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--oracle", required=True, help="truth table of 2**n bits, e.g. 00001111")
        parser.add_argument("--shots", type=positive_int, default=None, help="also sample the input register")

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        try:
            f = BooleanOracle.from_bits(args.oracle)
        except ValidationError as e:
            raise UsageError(str(e)) from None
        verdict = deutsch_jozsa(f)
        histogram = None
        if args.shots is not None:
            histogram = deutsch_jozsa_sample(f, ShotConfig(args.shots, context.seed))
        return RunOutcome(
            result={"oracle": f.bits(), "n": f.n, "verdict": verdict, "p_zero": zero_probability(f)},
            histogram=histogram,
            num_qubits=f.n + 1,
            shots=args.shots,
        )
