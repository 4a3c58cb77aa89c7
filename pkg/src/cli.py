#!/usr/bin/env python3
"""QubitKit command line.

Usage:
    qubitkit simulate circuit.txt [--shots K] [--seed S] [--format json|csv] [--amplitudes] [--timing]
    qubitkit run dj --oracle 00001111 [--seed S]
    qubitkit run shor15 --a 13 --condition-branch 3

Reports go to stdout; diagnostics and logs go to stderr.
Exit codes: 0 success, 1 usage error, 2 parse error, 3 runtime error.
"""

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .errors import CircuitParseError, QubitKitError, UsageError
from .io.circuit_format import decode_source, parse_circuit, to_circuit
from .io.report import RunReport
from .runners.base_runner import RunContext, positive_int
from .runners.registry import RunnerRegistry
from .sim.circuit import apply_circuit
from .sim.measure import ShotConfig, sample
from .sim.rng import MASK_64
from .sim.state import basis_state
from .utils.config_manager import LOG_LEVELS, OUTPUT_FORMATS, ConfigManager, SimConfig
from .utils.run_logger import RunLogger

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RUNTIME = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class C:
    """ANSI color codes for stderr messages."""

    BOLD = "\033[1m"
    END = "\033[0m"
    RED = "\033[38;5;196m"
    GREEN = "\033[38;5;46m"
    YELLOW = "\033[38;5;226m"
    CYAN = "\033[38;5;51m"


def _say(glyph: str, color: str, text: str) -> None:
    if sys.stderr.isatty():
        sys.stderr.write(f"{color}{C.BOLD}{glyph}{C.END} {text}\n")
    else:
        sys.stderr.write(f"{glyph} {text}\n")


def error(text: str) -> None:
    _say("✗", C.RED, text)


def warn(text: str) -> None:
    _say("⚠", C.YELLOW, text)


class QubitKitArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value <= MASK_64:
        raise argparse.ArgumentTypeError(f"seed {value} is outside the 64-bit unsigned range")
    return value


def _bootstrap(argv: Sequence[str]) -> argparse.Namespace:
    """Read the flags needed before the full parser can be built."""
    parser = QubitKitArgumentParser(add_help=False)
    parser.add_argument("--config-dir", default="config")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, default=None)
    known, _ = parser.parse_known_args(argv)
    return known


def build_parser(registry: RunnerRegistry, cfg: SimConfig) -> argparse.ArgumentParser:
    parser = QubitKitArgumentParser(prog="qubitkit", description="Desk-scale state-vector quantum simulator")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config-dir", default="config", help="directory holding config.yaml and runners.yaml")
    parser.add_argument(
        "--log-level", type=str.upper, choices=LOG_LEVELS, default=None, help="override the configured log level"
    )

    common = QubitKitArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=None, help="64-bit sampling seed (default: QUBITKIT_SEED or config)")
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=cfg.output_format)
    common.add_argument("--timing", action="store_true", help="include wall time in the report meta")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    simulate = subparsers.add_parser("simulate", parents=[common], help="run a circuit file")
    simulate.add_argument("file", help="circuit text file")
    simulate.add_argument("--shots", type=positive_int, default=None, help="sample this many shots")
    simulate.add_argument("--amplitudes", action="store_true", help="include the final amplitudes")

    run = subparsers.add_parser("run", help="run a built-in algorithm")
    registry.add_subparsers(run, QubitKitArgumentParser, parents=[common])
    return parser


def cmd_simulate(args: argparse.Namespace, seed: int) -> RunReport:
    path = Path(args.file)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e}") from None

    circuit_file = parse_circuit(decode_source(data))
    circuit = to_circuit(circuit_file)
    state = apply_circuit(basis_state(circuit.num_qubits, 0), circuit)
    qubits = circuit_file.measured or tuple(range(circuit.num_qubits))

    histogram = None
    if args.shots is not None:
        histogram = sample(state, qubits, ShotConfig(args.shots, seed))
    logger.info(f"Simulated {path.name}: {circuit.num_qubits} qubits, {len(circuit)} ops")
    return RunReport.from_state(
        state,
        seed,
        qubits,
        shots=args.shots,
        histogram=histogram,
        include_amplitudes=args.amplitudes,
    )


def cmd_run(registry: RunnerRegistry, args: argparse.Namespace, context: RunContext) -> RunReport:
    outcome = registry.execute(args.algorithm, args, context)
    logger.info(f"Ran {args.algorithm} with seed {context.seed}")
    return RunReport(
        probabilities=outcome.probabilities,
        histogram=outcome.histogram,
        result=outcome.result,
        meta={
            "algorithm": args.algorithm,
            "seed": context.seed,
            "shots": outcome.shots,
            "num_qubits": outcome.num_qubits,
        },
    )


def _source_of(args: argparse.Namespace) -> str:
    return getattr(args, "file", None) or getattr(args, "hamiltonian", None) or "<input>"


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)

    try:
        boot = _bootstrap(argv)
    except UsageError as e:
        error(str(e))
        return EXIT_USAGE

    config_manager = ConfigManager(boot.config_dir)
    config_manager.load_all()
    cfg = config_manager.sim_config

    level_name = boot.log_level or cfg.log_level.upper()
    # an unknown configured level is reported by validate() below
    level = getattr(logging, level_name) if level_name in LOG_LEVELS else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    problems = config_manager.validate()
    if problems:
        for problem in problems:
            error(f"Config: {problem}")
        return EXIT_USAGE

    registry = RunnerRegistry(config_manager.runner_settings())
    registry.discover_and_load()
    parser = build_parser(registry, cfg)

    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        error(str(e))
        return EXIT_USAGE

    command = args.command if args.command == "simulate" else args.algorithm
    run_logger = RunLogger(cfg.run_log_path, cfg.log_retention_days) if cfg.run_log_path else None
    if run_logger:
        run_logger.log_run_start(command, {k: v for k, v in vars(args).items() if k != "config_dir"})

    try:
        seed = config_manager.resolve_seed(args.seed)
        start = time.perf_counter()
        if args.command == "simulate":
            report = cmd_simulate(args, seed)
        else:
            report = cmd_run(registry, args, RunContext(seed, cfg))
        elapsed = time.perf_counter() - start
        if args.timing:
            report.meta["wall_time_s"] = elapsed
        sys.stdout.write(report.render(args.format))
        if run_logger:
            run_logger.log_run_complete(command, seed, elapsed)
        return EXIT_OK
    except CircuitParseError as e:
        source = _source_of(args)
        if run_logger:
            run_logger.log_parse_error(source, e.kind, e.line, e.column)
        error(f"{source}:{e}")
        return EXIT_PARSE
    except UsageError as e:
        error(str(e))
        return EXIT_USAGE
    except QubitKitError as e:
        if run_logger:
            run_logger.log_run_failed(command, type(e).__name__, str(e))
        error(f"{type(e).__name__}: {e}")
        return EXIT_RUNTIME
    finally:
        if run_logger:
            run_logger.close()


if __name__ == "__main__":
    sys.exit(main())
