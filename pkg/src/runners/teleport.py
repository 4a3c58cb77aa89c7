"""Quantum teleportation of a Bloch-sphere state."""

import argparse

from ..algorithms.protocols import teleport
from ..errors import UsageError, ValidationError
from ..sim.rng import CounterRng
from ..sim.state import BlochAngles, fidelity_mod_phase, from_bloch
from .base_runner import BaseRunner, RunContext, RunOutcome


class TeleportRunner(BaseRunner):
    name = "teleport"
    command = "teleport"
    description = "Teleport cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and report fidelities"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--theta", type=float, default=0.0)
        parser.add_argument("--phi", type=float, default=0.0)
        parser.add_argument("--trials", type=int, default=100)

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        if args.trials < 1:
            raise UsageError(f"--trials must be >= 1, got {args.trials}")
        try:
            q = from_bloch(BlochAngles(args.theta, args.phi))
        except ValidationError as e:
            raise UsageError(str(e)) from None
        rng = CounterRng(context.seed)
        branches = {"00": 0, "01": 0, "10": 0, "11": 0}
        fidelities = []
        for _ in range(args.trials):
            received, (m1, m2) = teleport(q, rng)
            branches[f"{m1}{m2}"] += 1
            fidelities.append(fidelity_mod_phase(received, q))
        min_fidelity = min(fidelities)
        return RunOutcome(
            result={
                "theta": args.theta,
                "phi": args.phi,
                "trials": args.trials,
                "branches": branches,
                "min_fidelity": min_fidelity,
                "all_recovered": min_fidelity >= 1 - context.config.tolerance,
            },
            histogram=branches,
            num_qubits=3,
            shots=args.trials,
        )
