"""Run reports and their JSON / CSV renderings.

JSON schema (keys always in this order)::

    {
      "probabilities": [float, ...] | null,   # over the measured wires; index = decimal label
      "histogram":     {"bits": int, ...},    # only with shots
      "amplitudes":    [[re, im], ...],       # only when requested
      "result":        {...},                 # only for algorithm runs
      "meta": {"seed": int, "shots": int | null, "num_qubits": int | null,
               "measured": [int, ...], "version": str,
               "wall_time_s": float}                # wall time only with --timing
    }

JSON floats are written with ``repr``: the shortest string that reads back
to the same double, never more than 17 significant digits. CSV probabilities
use ``format(p, ".17g")``. Both forms round-trip exactly, and fixed-seed
output is byte-identical across runs.

CSV: ``label,bits,probability[,count]`` per basis label. Runners without a
register readout write ``key,value`` result rows, followed by a
``bits,count`` block when shots were sampled.
"""

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional, Sequence

import numpy as np

from .. import __version__
from ..errors import ValidationError
from ..sim.measure import joint_distribution
from ..sim.state import StateVector, decimal_to_binary

PROBABILITY_SUM_EPS = 1e-9


def to_plain(value: Any) -> Any:
    """Convert numpy scalars/arrays, tuples and enums to JSON-ready values."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_plain(v) for v in value.tolist()]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    return value


@dataclass
class RunReport:
    """Everything a single ``simulate`` or ``run`` invocation emits."""

    probabilities: Optional[list[float]] = None
    histogram: Optional[dict[str, int]] = None
    amplitudes: Optional[list[complex]] = None
    result: Optional[dict[str, Any]] = None
    meta: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.probabilities is not None:
            total = float(sum(self.probabilities))
            if abs(total - 1.0) > PROBABILITY_SUM_EPS:
                raise ValidationError(f"Probabilities sum to {total!r}, not 1")
        self.meta.setdefault("version", __version__)

    @classmethod
    def from_state(
        cls,
        state: StateVector,
        seed: int,
        qubits: Optional[Sequence[int]] = None,
        shots: Optional[int] = None,
        histogram: Optional[dict[str, int]] = None,
        include_amplitudes: bool = False,
    ) -> "RunReport":
        """Probabilities over ``qubits`` (every wire by default), full amplitudes on request."""
        measured = tuple(range(state.num_qubits)) if qubits is None else tuple(qubits)
        return cls(
            probabilities=joint_distribution(state, measured).tolist(),
            histogram=histogram,
            amplitudes=state.amplitudes.tolist() if include_amplitudes else None,
            meta={
                "seed": seed,
                "shots": shots,
                "num_qubits": state.num_qubits,
                "measured": list(measured),
            },
        )

    def _label_width(self) -> int:
        return max(len(self.probabilities).bit_length() - 1, 1)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"probabilities": to_plain(self.probabilities)}
        if self.histogram is not None:
            data["histogram"] = {k: int(v) for k, v in sorted(self.histogram.items())}
        if self.amplitudes is not None:
            data["amplitudes"] = [[float(a.real), float(a.imag)] for a in self.amplitudes]
        if self.result is not None:
            data["result"] = to_plain(self.result)
        data["meta"] = to_plain(self.meta)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        """Render the report as CSV; see the module docstring for the layout."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if self.probabilities is None:
            writer.writerow(["key", "value"])
            for key, value in (self.result or {}).items():
                plain = to_plain(value)
                writer.writerow([key, plain if isinstance(plain, str) else json.dumps(plain)])
            if self.histogram is not None:
                writer.writerow(["bits", "count"])
                for bits, count in sorted(self.histogram.items()):
                    writer.writerow([bits, str(int(count))])
            return buffer.getvalue()
        n = self._label_width()
        header = ["label", "bits", "probability"]
        if self.histogram is not None:
            header.append("count")
        writer.writerow(header)
        for label, p in enumerate(self.probabilities):
            bits = "".join(str(b) for b in decimal_to_binary(label, n))
            row = [str(label), bits, format(p, ".17g")]
            if self.histogram is not None:
                row.append(str(self.histogram.get(bits, 0)))
            writer.writerow(row)
        return buffer.getvalue()

    def render(self, output_format: str) -> str:
        if output_format == "json":
            return self.to_json() + "\n"
        if output_format == "csv":
            return self.to_csv()
        raise ValidationError(f"Unknown output format {output_format!r}")
