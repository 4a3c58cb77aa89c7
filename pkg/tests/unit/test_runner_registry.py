"""Unit tests for runner discovery and dispatch."""

import argparse

import pytest

from src.errors import MethodFailureError, UsageError
from src.runners.base_runner import RunContext
from src.runners.registry import RunnerRegistry

ALL_COMMANDS = ["deutsch", "dj", "qec-bitflip", "qpe", "shor15", "superdense", "swap-test", "teleport", "trotter"]


@pytest.fixture
def registry():
    registry = RunnerRegistry({"teleport": {"enabled": True, "defaults": {"trials": 7}}})
    registry.discover_and_load()
    return registry


def _parse(registry: RunnerRegistry, argv: list[str]) -> argparse.Namespace:
    parser = argparse.ArgumentParser()
    registry.add_subparsers(parser, argparse.ArgumentParser)
    return parser.parse_args(argv)


class TestDiscovery:
    def test_every_runner_loaded(self, registry):
        assert registry.commands() == ALL_COMMANDS

    def test_disabled_runner_skipped(self):
        registry = RunnerRegistry({"dj": {"enabled": False}})
        registry.discover_and_load()
        assert "dj" not in registry.commands()
        assert registry.get_runner("dj") is None

    def test_config_defaults_applied(self, registry):
        args = _parse(registry, ["teleport"])
        assert args.trials == 7

    def test_flags_override_defaults(self, registry):
        args = _parse(registry, ["teleport", "--trials", "3"])
        assert args.trials == 3


class TestExecute:
    def test_success_counted(self, registry):
        args = _parse(registry, ["dj", "--oracle", "0110"])
        outcome = registry.execute("dj", args, RunContext(seed=0))
        assert outcome.result["verdict"].value == "Balanced"
        stats = registry.get_all_stats()["dj"]
        assert (stats.total_executions, stats.success_count, stats.failure_count) == (1, 1, 0)
        assert stats.last_used is not None

    def test_failure_counted_and_reraised(self, registry):
        args = _parse(registry, ["shor15", "--a", "14"])
        with pytest.raises(MethodFailureError):
            registry.execute("shor15", args, RunContext(seed=0))
        assert registry.get_all_stats()["shor15"].failure_count == 1

    def test_unknown_command(self, registry):
        with pytest.raises(UsageError):
            registry.execute("grover", argparse.Namespace(), RunContext(seed=0))
