"""Runner registry: discovers, loads and dispatches ``run`` algorithms."""

import argparse
import importlib
import inspect
import logging
import pkgutil
from datetime import datetime
from typing import Optional

from ..errors import UsageError
from .base_runner import BaseRunner, RunContext, RunnerStats, RunOutcome

logger = logging.getLogger(__name__)


class RunnerRegistry:
    """Discovers, loads, and dispatches algorithm runners.

    Scans the runners package for BaseRunner subclasses, checks the enable
    flag from runners.yaml, and registers one ``run`` subcommand per runner.
    """

    def __init__(self, runners_config: dict):
        """Initialize the registry.

        Args:
            runners_config: The 'runners' section from runners.yaml.
        """
        self.config = runners_config
        self.runners: dict[str, BaseRunner] = {}
        self.stats: dict[str, RunnerStats] = {}

    def discover_and_load(self) -> None:
        """Import every runner module and instantiate the enabled runners."""
        import src.runners as runners_package

        package_path = runners_package.__path__
        package_name = runners_package.__name__

        for _, module_name, _ in pkgutil.iter_modules(package_path):
            if module_name.startswith("_") or module_name in ("base_runner", "registry"):
                continue

            full_module_name = f"{package_name}.{module_name}"

            try:
                module = importlib.import_module(full_module_name)
            except Exception as e:
                logger.warning(f"Failed to import runner module '{module_name}': {e}")
                continue

            for attr_name in dir(module):
                attr = getattr(module, attr_name)
                if (
                    inspect.isclass(attr)
                    and issubclass(attr, BaseRunner)
                    and attr is not BaseRunner
                    and not inspect.isabstract(attr)
                    and attr.__module__ == module.__name__
                ):
                    self._try_load_runner(attr)

    def _try_load_runner(self, runner_class: type[BaseRunner]) -> None:
        name = runner_class.name
        command = runner_class.command

        if not name or not command:
            logger.warning(f"Runner class {runner_class.__name__} missing name or command, skipping")
            return

        runner_config = self.config.get(name, {"enabled": True})

        if not runner_config.get("enabled", True):
            logger.info(f"Runner '{name}' disabled in config, skipping")
            return

        try:
            runner = runner_class(runner_config)
        except Exception as e:
            logger.warning(f"Failed to instantiate runner '{name}': {e}")
            return

        self.runners[command] = runner
        self.stats[command] = RunnerStats(name=name)
        logger.debug(f"Loaded runner '{name}' -> run {command}")

    def get_runner(self, command: str) -> Optional[BaseRunner]:
        return self.runners.get(command)

    def commands(self) -> list[str]:
        return sorted(self.runners)

    def add_subparsers(
        self,
        run_parser: argparse.ArgumentParser,
        parser_class: type,
        parents: Optional[list[argparse.ArgumentParser]] = None,
    ) -> None:
        """One sub-subcommand per loaded runner, with config defaults applied."""
        subparsers = run_parser.add_subparsers(dest="algorithm", metavar="ALGORITHM", parser_class=parser_class)
        subparsers.required = True
        for command in self.commands():
            runner = self.runners[command]
            sub = subparsers.add_parser(
                command, parents=parents or [], help=runner.description, description=runner.description
            )
            runner.add_arguments(sub)
            if runner.defaults:
                sub.set_defaults(**runner.defaults)

    def execute(self, command: str, args: argparse.Namespace, context: RunContext) -> RunOutcome:
        """Run a loaded runner and track its stats.

        Raises:
            UsageError: If no runner is registered under ``command``.
        """
        runner = self.runners.get(command)
        if not runner:
            raise UsageError(f"Unknown algorithm: {command}")

        stats = self.stats[command]
        stats.total_executions += 1
        stats.last_used = datetime.now()

        try:
            outcome = runner.execute(args, context)
        except Exception:
            stats.failure_count += 1
            raise
        stats.success_count += 1
        return outcome

    def get_all_stats(self) -> dict[str, RunnerStats]:
        return dict(self.stats)
