"""Tests for trajectory metrics."""

import numpy as np
import pytest

from platoon_v2i.dynamics.metrics import peak_spacing_errors, post_window_envelope, settling_time
from platoon_v2i.exceptions import ValidationError


class TestPeakSpacingErrors:
    """Test peak_spacing_errors()."""

    def test_zero_trajectory(self, trajectory_factory):
        np.testing.assert_array_equal(peak_spacing_errors(trajectory_factory(np.zeros((5, 3)))), 0.0)

    def test_uses_absolute_value(self, trajectory_factory):
        traj = trajectory_factory([[0.0, 0.1], [-0.5, 0.2], [0.3, -0.4]])
        np.testing.assert_allclose(peak_spacing_errors(traj), [0.5, 0.4])

    def test_empty_rejected(self, trajectory_factory):
        with pytest.raises(ValidationError, match="empty"):
            peak_spacing_errors(trajectory_factory(np.zeros((0, 2))))


class TestSettlingTime:
    """Test settling_time()."""

    def test_always_settled(self, trajectory_factory):
        """A zero trajectory settles at its first sample."""
        assert settling_time(trajectory_factory(np.zeros((5, 2))), tol=1e-6) == 0.0

    def test_settles_after_last_excursion(self, trajectory_factory):
        errors = [[0.0, 0.0], [0.5, 0.0], [0.0, 0.2], [0.0, 0.0], [0.0, 0.0]]
        assert settling_time(trajectory_factory(errors, dt=0.1), tol=1e-3) == pytest.approx(0.3)

    def test_never_settles(self, trajectory_factory):
        errors = [[0.0], [0.0], [0.5]]
        assert settling_time(trajectory_factory(errors), tol=1e-3) is None

    def test_diverged_never_settles(self, trajectory_factory):
        assert settling_time(trajectory_factory(np.zeros((3, 1)), diverged=True), tol=1e-3) is None

    def test_rejects_non_positive_tol(self, trajectory_factory):
        with pytest.raises(ValidationError):
            settling_time(trajectory_factory(np.zeros((3, 1))), tol=0.0)


class TestPostWindowEnvelope:
    """Test post_window_envelope()."""

    def test_window_maxima(self, trajectory_factory):
        errors = np.linspace(1.0, 0.0, 41)[:, np.newaxis]
        env = post_window_envelope(trajectory_factory(errors, dt=0.1), t_from=0.0, window=1.0)
        assert len(env) == 4
        assert np.all(np.diff(env) < 0)

    def test_rejects_bad_window(self, trajectory_factory):
        with pytest.raises(ValidationError):
            post_window_envelope(trajectory_factory(np.zeros((3, 1))), t_from=0.0, window=0.0)
