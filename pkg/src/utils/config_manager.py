"""Configuration management for QubitKit."""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import yaml
from dotenv import load_dotenv

from ..errors import UsageError
from ..sim.rng import MASK_64

logger = logging.getLogger(__name__)

SEED_ENV_VAR = "QUBITKIT_SEED"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
OUTPUT_FORMATS = ("json", "csv")


@dataclass
class SimConfig:
    """Simulation defaults loaded from config.yaml."""

    tolerance: float = 1e-10
    default_shots: int = 1024
    default_seed: int = 0
    max_dense_qubits: int = 12
    max_density_qubits: int = 6
    output_format: str = "json"

    # Logging settings
    log_level: str = "INFO"
    run_log_path: str = "logs/runs.log"
    log_retention_days: int = 30


@dataclass
class RunnerConfig:
    """Per-runner settings from runners.yaml."""

    name: str
    enabled: bool = True
    defaults: dict[str, Any] = field(default_factory=dict)


class ConfigManager:
    """Loads and validates configuration from YAML files and the environment."""

    def __init__(self, config_dir: str = "config"):
        self.config_dir = Path(config_dir)
        self.sim_config: Optional[SimConfig] = None
        self.runner_configs: dict[str, RunnerConfig] = {}

    def load_all(self) -> None:
        """Load all configuration files."""
        self.load_env()

        config_data = self.load_yaml("config.yaml")
        runners_data = self.load_yaml("runners.yaml")

        self._parse_sim_config(config_data)
        self._parse_runners(runners_data)

        logger.info("Configuration loaded successfully")

    def load_env(self) -> dict[str, str]:
        """Load overrides from config/.env; variables already set win."""
        env_path = self.config_dir / ".env"

        if env_path.exists():
            load_dotenv(env_path)
            logger.debug(f"Loaded environment from {env_path}")
        else:
            logger.debug(f"No .env file found at {env_path}")

        return {SEED_ENV_VAR: os.getenv(SEED_ENV_VAR, "")}

    def load_yaml(self, filename: str) -> dict[str, Any]:
        """Load YAML configuration file."""
        filepath = self.config_dir / filename

        if not filepath.exists():
            logger.warning(f"Config file not found: {filepath}")
            return {}

        with open(filepath, "r") as f:
            data = yaml.safe_load(f) or {}

        if not isinstance(data, dict):
            logger.warning(f"Ignoring {filepath}: top level is not a mapping")
            return {}

        logger.debug(f"Loaded config from {filepath}")
        return data

    def validate(self) -> list[str]:
        """Validate configuration, return list of errors."""
        errors = []

        if not self.sim_config:
            errors.append("Configuration not loaded")
            return errors

        cfg = self.sim_config
        if not cfg.tolerance > 0:
            errors.append(f"tolerance must be positive, got {cfg.tolerance}")
        if cfg.default_shots < 1:
            errors.append(f"default_shots must be >= 1, got {cfg.default_shots}")
        if not 0 <= cfg.default_seed <= MASK_64:
            errors.append(f"default_seed must be a 64-bit unsigned integer, got {cfg.default_seed}")
        if cfg.log_level.upper() not in LOG_LEVELS:
            errors.append(f"Unknown log level '{cfg.log_level}'")
        if cfg.output_format not in OUTPUT_FORMATS:
            errors.append(f"Unknown output format '{cfg.output_format}'")
        if cfg.log_retention_days < 0:
            errors.append("log retention_days must be >= 0")

        return errors

    def resolve_seed(self, flag: Optional[int]) -> int:
        """``--seed`` beats QUBITKIT_SEED, which beats ``default_seed``.

        Raises:
            UsageError: If QUBITKIT_SEED is not an unsigned 64-bit integer.
        """
        if flag is not None:
            return flag
        raw = os.getenv(SEED_ENV_VAR, "").strip()
        if raw:
            try:
                seed = int(raw)
            except ValueError:
                raise UsageError(f"{SEED_ENV_VAR}={raw!r} is not an integer") from None
            if not 0 <= seed <= MASK_64:
                raise UsageError(f"{SEED_ENV_VAR}={seed} is outside the 64-bit range")
            return seed
        return self.sim_config.default_seed if self.sim_config else SimConfig.default_seed

    def runner_settings(self) -> dict[str, dict[str, Any]]:
        """Runner configs in the plain-dict shape the registry consumes."""
        return {
            name: {"enabled": cfg.enabled, "defaults": dict(cfg.defaults)}
            for name, cfg in self.runner_configs.items()
        }

    def _parse_sim_config(self, config_data: dict[str, Any]) -> None:
        """Parse simulation config from loaded data."""
        simulation = config_data.get("simulation", {}) or {}
        output = config_data.get("output", {}) or {}
        logging_cfg = config_data.get("logging", {}) or {}

        self.sim_config = SimConfig(
            # Simulation
            tolerance=float(simulation.get("tolerance", 1e-10)),
            default_shots=int(simulation.get("default_shots", 1024)),
            default_seed=int(simulation.get("default_seed", 0)),
            max_dense_qubits=int(simulation.get("max_dense_qubits", 12)),
            max_density_qubits=int(simulation.get("max_density_qubits", 6)),
            # Output
            output_format=output.get("format", "json"),
            # Logging
            log_level=logging_cfg.get("level", "INFO"),
            run_log_path=logging_cfg.get("run_log_path", "logs/runs.log") or "",
            log_retention_days=int(logging_cfg.get("retention_days", 30)),
        )

    def _parse_runners(self, data: dict[str, Any]) -> None:
        """Parse runner configs from loaded data."""
        self.runner_configs = {}

        for name, cfg in (data.get("runners", {}) or {}).items():
            if not isinstance(cfg, dict):
                continue

            self.runner_configs[name] = RunnerConfig(
                name=name,
                enabled=cfg.get("enabled", True),
                defaults=cfg.get("defaults", {}) or {},
            )
