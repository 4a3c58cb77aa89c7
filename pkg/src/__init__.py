"""QubitKit: desk-scale state-vector quantum circuit simulator."""

__version__ = "0.3.1"
