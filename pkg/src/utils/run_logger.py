"""Structured run logging for QubitKit."""

import json
import logging
from datetime import datetime
from logging.handlers import TimedRotatingFileHandler
from pathlib import Path
from typing import Any

# Longer string values are truncated in log entries
MAX_VALUE_CHARS = 80


class RunLogger:
    """Writes one JSON object per run event to a daily-rotated file."""

    def __init__(
        self,
        log_path: str = "logs/runs.log",
        retention_days: int = 30,
        log_level: int = logging.INFO,
    ):
        """Initialize RunLogger.

        Args:
            log_path: Path to the run log file
            retention_days: Number of rotated files to keep
            log_level: Logging level
        """
        self.log_path = Path(log_path)
        self.retention_days = retention_days
        self.logger = logging.getLogger("qubitkit.runs")
        self.logger.setLevel(log_level)
        # run events go to the file only, never to stderr
        self.logger.propagate = False
        self._setup_rotating_handler()

    def _setup_rotating_handler(self) -> None:
        """Configure rotating file handler."""
        self.log_path.parent.mkdir(parents=True, exist_ok=True)

        for handler in self.logger.handlers:
            handler.close()
        self.logger.handlers.clear()

        handler = TimedRotatingFileHandler(
            self.log_path,
            when="midnight",
            interval=1,
            backupCount=self.retention_days,
            encoding="utf-8",
        )

        formatter = logging.Formatter(
            "%(asctime)s | %(levelname)s | %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
        )
        handler.setFormatter(formatter)

        self.logger.addHandler(handler)

    def close(self) -> None:
        for handler in self.logger.handlers:
            handler.close()
        self.logger.handlers.clear()

    def _sanitize_data(self, data: dict[str, Any]) -> dict[str, Any]:
        """Truncate long string values (oracle tables, file contents)."""
        sanitized = {}

        for key, value in data.items():
            if isinstance(value, dict):
                sanitized[key] = self._sanitize_data(value)
            elif isinstance(value, str) and len(value) > MAX_VALUE_CHARS:
                sanitized[key] = value[: MAX_VALUE_CHARS - 3] + "..."
            else:
                sanitized[key] = value

        return sanitized

    def _log_event(
        self,
        event_type: str,
        data: dict[str, Any],
        level: int = logging.INFO,
    ) -> None:
        sanitized = self._sanitize_data(data)
        sanitized["event_type"] = event_type
        sanitized["timestamp"] = datetime.now().isoformat()

        message = json.dumps(sanitized, default=str)
        self.logger.log(level, message)

    def log_run_start(self, command: str, options: dict[str, Any]) -> None:
        """Log the start of a simulate/run invocation.

        Args:
            command: "simulate" or the algorithm name
            options: Parsed command-line options
        """
        self._log_event("RUN_START", {"command": command, "options": options})

    def log_run_complete(self, command: str, seed: int, wall_time_s: float) -> None:
        self._log_event(
            "RUN_COMPLETE",
            {"command": command, "seed": seed, "wall_time_s": round(wall_time_s, 6)},
        )

    def log_run_failed(self, command: str, error_type: str, message: str) -> None:
        self._log_event(
            "RUN_FAILED",
            {"command": command, "error_type": error_type, "message": message},
            level=logging.WARNING,
        )

    def log_parse_error(self, source: str, kind: str, line: int, column: int) -> None:
        """Log a circuit or Hamiltonian parse diagnostic.

        Args:
            source: File the text came from
            kind: Diagnostic kind (e.g. "unknown-mnemonic")
            line: 1-based line
            column: 1-based column
        """
        self._log_event(
            "PARSE_ERROR",
            {"source": source, "kind": kind, "line": line, "column": column},
            level=logging.WARNING,
        )
