# ADR: 2026-10-01-delay-aware-platoon-toolkit
# ADR: 2026-10-08-leader-speed-recovery
"""Tests for the fixed-step platoon integrator."""

from __future__ import annotations

import numpy as np
import pytest

from platoon_v2i.core.presets import SINUSOID_PROFILE, STEP_PROFILE_ZERO_GAP, REFERENCE_GAINS
from platoon_v2i.core.types import ControlGains, DisturbanceKind, DisturbanceProfile
from platoon_v2i.dynamics.control import control_inputs
from platoon_v2i.dynamics.history import HistoryBuffer
from platoon_v2i.dynamics.metrics import peak_spacing_errors
from platoon_v2i.dynamics.simulator import (
    Integrator,
    euler_step,
    leader_rate_function,
    simulate,
)
from platoon_v2i.exceptions import ValidationError


class TestSimulationScenario:
    """Test SimulationScenario invariants."""

    def test_delay_must_be_grid_multiple(self, scenario_factory, platoon_factory):
        """tau=0.3 with dt=0.007 is rejected."""
        with pytest.raises(ValidationError, match="delay not an integer multiple of dt"):
            scenario_factory(platoon=platoon_factory(delay=0.3), dt=0.007)

    def test_delay_grid_multiple_accepted(self, scenario_factory, platoon_factory):
        """tau=0.3 with dt=0.01 gives k=30."""
        scenario = scenario_factory(platoon=platoon_factory(delay=0.3), dt=0.01)
        assert scenario.delay_steps == 30
        assert scenario.n_steps == 10_000

    @pytest.mark.parametrize("dt", [0.0, -0.01, 0.1])
    def test_dt_range(self, scenario_factory, dt):
        with pytest.raises(ValidationError, match="dt must lie"):
            scenario_factory(dt=dt)

    def test_t_end_after_window(self, scenario_factory):
        with pytest.raises(ValidationError, match="must exceed the disturbance window"):
            scenario_factory(disturbance=SINUSOID_PROFILE, t_end=30.0)

    def test_t_end_grid_multiple(self, scenario_factory):
        with pytest.raises(ValidationError, match="t_end not an integer multiple"):
            scenario_factory(t_end=40.0025)

    def test_integrator_from_string(self, scenario_factory):
        assert scenario_factory(integrator="euler").integrator is Integrator.EULER

    def test_initial_positions(self, scenario_factory, platoon_factory):
        """x_i(0) = -i (h v_o + l), leader at 0."""
        pc = platoon_factory(m_followers=3)
        np.testing.assert_allclose(
            scenario_factory(platoon=pc).initial_positions(),
            [0.0, -pc.desired_gap, -2 * pc.desired_gap, -3 * pc.desired_gap],
        )


class TestEulerStep:
    """Test one hand-computed explicit Euler step."""

    def test_first_step_from_steady_pre_history(self, platoon_factory, gains_factory):
        """M=1, dt=0.1, tau=0.2, zero-gap step profile: nothing moves off v_o at t=0."""
        pc = platoon_factory(m_followers=1, delay=0.2)
        dt = 0.1
        x0 = -np.arange(2) * pc.desired_gap
        history = HistoryBuffer(x0, pc.target_velocity, dt, capacity=2)
        history.append(x0, np.full(2, pc.target_velocity))

        x_d, v_d = history.state_at_index(-2)
        u = control_inputs(x_d, v_d, gains_factory(), pc)
        assert u[0] == pytest.approx(0.0, abs=1e-12)

        rate = leader_rate_function(STEP_PROFILE_ZERO_GAP, pc.target_velocity)
        x1, v1 = euler_step(0.0, dt, x0, np.full(2, pc.target_velocity), u, rate)
        np.testing.assert_allclose(v1, [20.0, 20.0])
        np.testing.assert_allclose(x1, x0 + 2.0)


class TestLeaderRecovery:
    """Test the post-window leader regulator."""

    def test_recovery_pulls_toward_target(self):
        rate = leader_rate_function(SINUSOID_PROFILE, 20.0)
        assert rate(35.0, 21.0) == pytest.approx(-1.0)
        assert rate(35.0, 20.0) == 0.0

    def test_recovery_disabled(self):
        profile = DisturbanceProfile(kind=DisturbanceKind.SINUSOID, recovery_gain=0.0)
        assert leader_rate_function(profile, 20.0)(35.0, 21.0) == 0.0

    def test_leader_returns_to_target(self, scenario_factory):
        traj = simulate(scenario_factory(disturbance=SINUSOID_PROFILE, t_end=60.0))
        assert traj.v[-1, 0] == pytest.approx(20.0, abs=1e-6)


class TestSimulate:
    """Test simulate() invariants."""

    @pytest.mark.parametrize("key", ["fig3a", "fig3b", "fig3c", "fig4"])
    def test_equilibrium_invariance(self, scenario_factory, platoon_factory, key):
        """No disturbance: spacing errors stay at zero for 100 s at dt=0.005."""
        delay = {"fig3a": 0.1, "fig3b": 0.2}.get(key, 0.3)
        traj = simulate(scenario_factory(platoon=platoon_factory(delay=delay), gains=REFERENCE_GAINS[key]))
        assert len(traj) == 20_001
        assert np.max(np.abs(traj.e)) <= 1e-9
        assert not traj.diverged

    def test_spacing_errors_match_positions(self, scenario_factory):
        """Stored e equals e recomputed from x."""
        traj = simulate(scenario_factory(disturbance=SINUSOID_PROFILE, t_end=40.0, dt=0.01))
        np.testing.assert_array_equal(traj.e, traj.recompute_spacing_errors())

    def test_translation_invariance(self, scenario_factory):
        """Shifting every initial position leaves e and u unchanged."""
        base = simulate(scenario_factory(disturbance=SINUSOID_PROFILE, t_end=40.0, dt=0.01))
        shifted = simulate(
            scenario_factory(disturbance=SINUSOID_PROFILE, t_end=40.0, dt=0.01, position_offset=123.0)
        )
        np.testing.assert_allclose(shifted.e, base.e, atol=1e-8)
        np.testing.assert_allclose(shifted.u, base.u, atol=1e-8)

    def test_deterministic(self, scenario_factory):
        scenario = scenario_factory(disturbance=SINUSOID_PROFILE, t_end=40.0, dt=0.01)
        np.testing.assert_array_equal(simulate(scenario).x, simulate(scenario).x)

    def test_metadata(self, scenario_factory):
        traj = simulate(scenario_factory(t_end=1.0))
        assert traj.metadata == {"integrator": "rk4", "delay_steps": 60, "disturbance": "none"}

    def test_euler_close_to_rk4(self, scenario_factory):
        rk4 = simulate(scenario_factory(disturbance=SINUSOID_PROFILE, t_end=40.0))
        euler = simulate(scenario_factory(disturbance=SINUSOID_PROFILE, t_end=40.0, integrator="euler"))
        np.testing.assert_allclose(peak_spacing_errors(euler), peak_spacing_errors(rk4), rtol=5e-2)

    def test_divergence_truncates(self, scenario_factory):
        """Violently plant-unstable gains overflow; the run stops at the last finite sample."""
        gains = ControlGains(k_x=1000.0, k_v=0.75, k_vo=0.75, k_xo=1000.0)
        scenario = scenario_factory(gains=gains, disturbance=SINUSOID_PROFILE, t_end=100.0)
        traj = simulate(scenario)
        assert traj.diverged
        assert len(traj) < scenario.n_steps + 1
        assert np.isfinite(traj.x).all()
        assert np.isfinite(traj.v).all()


@pytest.mark.slow
class TestRefinement:
    """Test convergence under step refinement."""

    def test_halving_dt_shrinks_change(self, scenario_factory, platoon_factory):
        """Peak errors converge at first order as dt halves (tau=0.1 s, sinusoid).

        The input is held over each step, so the change halves with dt even
        under RK4.
        """
        platoon = platoon_factory(delay=0.1)

        def peaks(dt):
            return peak_spacing_errors(
                simulate(
                    scenario_factory(
                        platoon=platoon, gains=REFERENCE_GAINS["fig3a"], disturbance=SINUSOID_PROFILE, dt=dt
                    )
                )
            )

        coarse, mid, fine = peaks(0.02), peaks(0.01), peaks(0.005)
        d_coarse = np.max(np.abs(mid - coarse))
        d_fine = np.max(np.abs(fine - mid))
        assert d_fine < d_coarse
        assert 1.5 < d_coarse / d_fine < 2.5
        assert d_fine < 0.05 * np.max(fine)
