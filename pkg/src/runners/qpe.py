"""Phase estimation for diagonal single-qubit gates."""

import argparse

from ..algorithms.phase import eigenphase, phase_estimate_run
from ..errors import UsageError
from ..sim.gates import GateDef, pauli, phase, s, t
from ..sim.measure import ShotConfig
from ..sim.state import basis_state
from .base_runner import BaseRunner, RunContext, RunOutcome, positive_int

GATES = ("z", "s", "t", "p")


def _gate(name: str, phi: float) -> GateDef:
    if name == "z":
        return pauli("Z")
    if name == "s":
        return s()
    if name == "t":
        return t()
    return phase(phi)


class PhaseEstimationRunner(BaseRunner):
    name = "qpe"
    command = "qpe"
    description = "Estimate the eigenphase of Z, S, T or P(phi) on |0> or |1>"

    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--gate", choices=GATES, default="z")
        parser.add_argument("--phi", type=float, default=0.0, help="angle for --gate p")
        parser.add_argument("--eigenstate", type=int, choices=(0, 1), default=1)
        parser.add_argument("--ancillas", type=int, default=3)
        parser.add_argument("--shots", type=positive_int, default=None)

    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        if args.ancillas < 1:
            raise UsageError(f"--ancillas must be >= 1, got {args.ancillas}")
        shots = args.shots if args.shots is not None else context.config.default_shots
        u = _gate(args.gate, args.phi)
        eigenstate = basis_state(1, args.eigenstate)
        estimate = phase_estimate_run(u, eigenstate, args.ancillas, ShotConfig(shots, context.seed))
        return RunOutcome(
            result={
                "gate": args.gate,
                "ancillas": args.ancillas,
                "theta": estimate.theta,
                "outcome": estimate.outcome,
                "exact": eigenphase(u, eigenstate),
            },
            histogram=estimate.histogram,
            num_qubits=args.ancillas + 1,
            shots=shots,
        )
