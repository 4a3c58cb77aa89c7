"""Configuration and run logging utilities for QubitKit."""
