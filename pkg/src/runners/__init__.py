"""Algorithm runners behind ``qubitkit run``."""

from .base_runner import BaseRunner, RunContext, RunOutcome, RunnerStats

__all__ = ["BaseRunner", "RunContext", "RunOutcome", "RunnerStats"]
