"""Tests for QubitKit."""
