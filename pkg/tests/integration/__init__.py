"""Integration tests for QubitKit."""
