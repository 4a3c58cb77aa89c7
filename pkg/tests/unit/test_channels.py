"""Unit tests for density matrices and Kraus channels."""

import numpy as np
import pytest

from src.errors import DimensionError, ValidationError
from src.qec.channels import (
    DensityMatrix,
    KrausChannel,
    amplitude_damping_channel,
    apply_channel,
    apply_channels,
    bit_flip_channel,
    depolarizing_channel,
    embed_channel,
    pauli_channel,
    to_density,
)
from src.sim.state import StateVector, basis_state, plus_state


class TestDensityMatrix:
    def test_pure_state(self):
        rho = to_density(plus_state())
        assert rho.trace() == pytest.approx(1.0)
        assert np.allclose(rho.entries, 0.5 * np.ones((2, 2)))
        assert rho.fidelity(plus_state()) == pytest.approx(1.0)

    def test_rejects_bad_trace(self):
        with pytest.raises(ValidationError):
            DensityMatrix(1, np.eye(2))

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValidationError):
            DensityMatrix(1, [[0.5, 0.5], [0, 0.5]])

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(ValidationError):
            DensityMatrix(1, [[1.5, 0], [0, -0.5]])

    def test_size_limit(self):
        with pytest.raises(DimensionError):
            DensityMatrix(7, np.eye(128) / 128)


class TestChannels:
    def test_bit_flip_on_zero(self):
        rho = apply_channel(to_density(basis_state(1, 0)), bit_flip_channel(0.2))
        assert np.allclose(rho.entries, np.diag([0.8, 0.2]))

    def test_uniform_pauli_channel_is_fully_mixing(self):
        rho = apply_channel(to_density(StateVector(1, [0.6, 0.8j])), pauli_channel([0.25] * 4))
        assert np.allclose(rho.entries, np.eye(2) / 2)

    def test_full_depolarizing(self):
        rho = apply_channel(to_density(basis_state(1, 1)), depolarizing_channel(1.0))
        assert np.allclose(rho.entries, np.eye(2) / 2)

    def test_amplitude_damping(self):
        rho = apply_channel(to_density(basis_state(1, 1)), amplitude_damping_channel(0.3))
        assert rho.probability(0) == pytest.approx(0.3)
        assert rho.probability(1) == pytest.approx(0.7)

    def test_damping_rate_checked(self):
        with pytest.raises(ValidationError):
            amplitude_damping_channel(1.2)

    def test_trace_preserved_by_sequence(self):
        channels = [bit_flip_channel(0.1), depolarizing_channel(0.3), amplitude_damping_channel(0.4)]
        rho = apply_channels(to_density(plus_state()), channels)
        assert rho.trace() == pytest.approx(1.0, abs=1e-12)

    def test_rejects_non_trace_preserving(self):
        with pytest.raises(ValidationError):
            KrausChannel(((np.eye(2), 0.5),))

    def test_rejects_negative_weight(self):
        with pytest.raises(ValidationError):
            pauli_channel([1.2, -0.2, 0, 0])

    def test_pauli_channel_weight_count(self):
        with pytest.raises(ValidationError):
            pauli_channel([0.5, 0.5])


class TestEmbedChannel:
    def test_flip_middle_wire(self):
        channel = embed_channel(bit_flip_channel(1.0), 1, 3)
        rho = apply_channel(to_density(basis_state(3, 0)), channel)
        assert rho.probability(0b010) == pytest.approx(1.0)

    def test_size_mismatch(self):
        with pytest.raises(ValidationError):
            apply_channel(to_density(basis_state(2, 0)), bit_flip_channel(0.1))

    def test_wire_out_of_range(self):
        with pytest.raises(ValidationError):
            embed_channel(bit_flip_channel(0.1), 3, 3)
