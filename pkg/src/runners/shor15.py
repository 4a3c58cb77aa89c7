"""Order finding for N = 15."""

import argparse

from ..algorithms.shor import shor15
from .base_runner import BaseRunner, RunContext, RunOutcome


class Shor15Runner(BaseRunner):
    name = "shor15"
    command = "shor15"
    description = "Factor 15 from the period of a^x mod 15"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--a", type=int, default=13)
        group = parser.add_mutually_exclusive_group()
        group.add_argument("--condition-branch", type=int, default=None, help="project onto a^x mod 15 for this x")
        group.add_argument("--condition-residue", type=int, default=None, help="project onto this residue")

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        outcome = shor15(
            args.a,
            conditioned_residue=args.condition_residue,
            condition_branch=args.condition_branch,
            seed=context.seed,
        )
        distribution = outcome.distribution.tolist()
        return RunOutcome(
            result={
                "a": outcome.a,
                "residue": outcome.residue,
                "residue_probability": outcome.residue_probability,
                "distribution": {str(y): distribution[y] for y in outcome.support()},
                "period": outcome.period,
                "factors": list(outcome.factors),
            },
            probabilities=distribution,
            num_qubits=8,
        )
