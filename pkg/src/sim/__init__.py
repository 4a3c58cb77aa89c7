"""State-vector simulation core."""

from .circuit import Circuit, CircuitOp, apply_circuit, apply_gate, circuit_unitary, inverse
from .gates import GateDef
from .measure import MeasurementOutcome, ShotConfig
from .state import StateVector

__all__ = [
    "Circuit",
    "CircuitOp",
    "GateDef",
    "MeasurementOutcome",
    "ShotConfig",
    "StateVector",
    "apply_circuit",
    "apply_gate",
    "circuit_unitary",
    "inverse",
]
