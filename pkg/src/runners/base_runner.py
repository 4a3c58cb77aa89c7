"""Base runner interface for ``qubitkit run`` algorithms."""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Optional

from ..utils.config_manager import SimConfig


def positive_int(text: str) -> int:
    """argparse type for counts that must be at least 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid count {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"count must be >= 1, got {value}")
    return value


@dataclass
class RunContext:
    """Per-invocation values shared by every runner."""

    seed: int
    config: SimConfig = field(default_factory=SimConfig)


@dataclass
class RunOutcome:
    """Result from a runner execution."""

    result: dict[str, Any]
    probabilities: Optional[list[float]] = None
    histogram: Optional[dict[str, int]] = None
    num_qubits: Optional[int] = None
    shots: Optional[int] = None


@dataclass
class RunnerStats:
    """Per-runner usage statistics."""

    name: str
    total_executions: int = 0
    success_count: int = 0
    failure_count: int = 0
    last_used: Optional[datetime] = None


class BaseRunner(ABC):
    """Base class for all algorithm runners.

    Subclasses MUST set the class attributes: name, command, description.
    """

    # Subclasses MUST set these
    name: str = ""
    command: str = ""
    description: str = ""

    def __init__(self, config: dict):
        """Initialize with runner-specific config from runners.yaml.

        Args:
            config: Runner-specific configuration dictionary.
        """
        self.config = config
        self.enabled: bool = config.get("enabled", True)
        self.defaults: dict[str, Any] = dict(config.get("defaults", {}) or {})

    @abstractmethod
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        """Declare the runner's flags on its subcommand parser."""
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        """Run the algorithm.

        Args:
            args: Parsed flags (runners.yaml defaults already applied).
            context: Seed and simulation config.

        Returns:
            RunOutcome with the structured result.
        """
        pass
