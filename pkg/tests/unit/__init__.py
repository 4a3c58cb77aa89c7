"""Unit tests for QubitKit."""
