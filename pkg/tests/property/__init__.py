"""Property-based tests for QubitKit."""
