# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Closed-loop behaviour of the corpus gain sets.

String-stable rows settle after the disturbance with spacing errors shrinking
upstream; the string-unstable row amplifies them along the platoon.
"""

from __future__ import annotations

import numpy as np
import pytest

from platoon_v2i.config.loader import load_config
from platoon_v2i.core.presets import SINUSOID_PROFILE, reference_platoon
from platoon_v2i.core.types import ControlGains
from platoon_v2i.dynamics.metrics import peak_spacing_errors, post_window_envelope, settling_time
from platoon_v2i.dynamics.simulator import SimulationScenario, simulate
from platoon_v2i.stability.plant import plant_stability_check

pytestmark = pytest.mark.slow

DISTURBANCE_END = 30.0


def _simulate(scenario_id: str):
    return simulate(load_config(scenario_id).simulation)


class TestStringStableRows:
    """Sinusoid disturbance with the string-stable gain rows."""

    @pytest.mark.parametrize("scenario_id", ["fig3a", "fig3b", "fig3c"])
    def test_settles_within_thirty_seconds(self, scenario_id):
        """All |e_i| drop below 1e-3 m within 30 s after the disturbance ends."""
        settle = settling_time(_simulate(scenario_id), tol=1e-3)
        assert settle is not None
        assert DISTURBANCE_END < settle <= DISTURBANCE_END + 30.0

    @pytest.mark.parametrize("scenario_id", ["fig3a", "fig3b", "fig3c"])
    def test_peaks_non_increasing_upstream(self, scenario_id):
        peaks = peak_spacing_errors(_simulate(scenario_id))
        assert np.all(np.diff(peaks) <= 1e-6), peaks

    def test_tau_03_peaks_strictly_decreasing(self):
        peaks = peak_spacing_errors(_simulate("fig3c"))
        assert np.all(np.diff(peaks) < 0), peaks

    def test_envelope_decays_after_disturbance(self):
        """Plant-stable gains: the post-window error envelope shrinks."""
        env = post_window_envelope(_simulate("fig3c"), t_from=DISTURBANCE_END, window=10.0)
        significant = env[env > 1e-9]
        assert len(significant) >= 2
        assert np.all(np.diff(significant) <= 0), env


class TestStringUnstableRow:
    """Sinusoid disturbance with (0.1, 0.2, 0.5, 0.1) at tau=0.3 s."""

    def test_peaks_strictly_increasing(self):
        peaks = peak_spacing_errors(_simulate("fig4"))
        assert np.all(np.diff(peaks) > 0), peaks

    def test_never_settles(self):
        assert settling_time(_simulate("fig4"), tol=1e-3) is None


class TestPlantUnstableGains:
    """Gains well outside the plant-stability region."""

    def test_errors_fail_to_decay(self):
        gains = ControlGains(k_x=4.0, k_v=0.75, k_vo=0.75, k_xo=4.0)
        platoon = reference_platoon(delay=0.3)
        verdict = plant_stability_check(gains.lambda_eta(platoon.headway), platoon.delay)
        assert verdict.margin < -0.1

        traj = simulate(
            SimulationScenario(platoon=platoon, gains=gains, disturbance=SINUSOID_PROFILE, t_end=60.0)
        )
        if traj.diverged:
            return
        env = post_window_envelope(traj, t_from=DISTURBANCE_END, window=10.0)
        assert env[-1] > env[0]


class TestPlatoonSize:
    """Platoon size barely changes the spacing errors (tau=0.3 s)."""

    def test_shared_followers_match(self):
        small, large = _simulate("fig7a"), _simulate("fig7b")
        p_small, p_large = peak_spacing_errors(small), peak_spacing_errors(large)
        shared = len(p_small)
        np.testing.assert_allclose(p_large[:shared], p_small, rtol=0.05)

        s_small, s_large = settling_time(small, 1e-3), settling_time(large, 1e-3)
        assert s_small is not None and s_large is not None
        assert abs(s_small - s_large) < 1.0


class TestDelay:
    """Longer delay enlarges the spacing errors (M=6)."""

    def test_larger_peaks_at_longer_delay(self):
        short, long = peak_spacing_errors(_simulate("fig8a")), peak_spacing_errors(_simulate("fig8b"))
        assert np.all(long > short)
