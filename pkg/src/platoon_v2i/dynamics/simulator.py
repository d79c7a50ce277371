# ADR: 2026-10-01-delay-aware-platoon-toolkit
# ADR: 2026-10-08-leader-speed-recovery
"""
Fixed-step integrator for the closed-loop platoon.

The delay tau is an integer number k of steps, so every delayed lookup lands
on a recorded grid point. The default scheme is RK4 with the control inputs
held at their value from the delayed state of the step start (u is piecewise
constant over a step); only the leader's acceleration is re-evaluated per
stage. Explicit Euler is kept for hand-checkable cases.

Outside the disturbance window the leader follows dv0/dt = -k_r (v0 - v_o),
which is identically zero while v0 = v_o.

Usage:
    from platoon_v2i.core.presets import SINUSOID_PROFILE, REFERENCE_GAINS, reference_platoon
    from platoon_v2i.dynamics.simulator import SimulationScenario, simulate

    scenario = SimulationScenario(
        platoon=reference_platoon(delay=0.3),
        gains=REFERENCE_GAINS["fig3c"],
        disturbance=SINUSOID_PROFILE,
        t_end=100.0,
    )
    traj = simulate(scenario)
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from platoon_v2i.core.types import (
    ControlGains,
    DisturbanceKind,
    DisturbanceProfile,
    PlatoonConfig,
    Trajectory,
)
from platoon_v2i.dynamics.control import control_inputs, leader_acceleration
from platoon_v2i.dynamics.history import HistoryBuffer
from platoon_v2i.exceptions import ValidationError

logger = logging.getLogger(__name__)

DEFAULT_DT = 0.005
MAX_DT = 0.05
GRID_TOLERANCE = 1e-9


class Integrator(str, Enum):
    """Fixed-step scheme used by `simulate`."""

    RK4 = "rk4"
    EULER = "euler"


def _steps(duration: float, dt: float) -> int | None:
    """Number of dt steps in duration, or None if it is not an integer multiple."""
    n = round(duration / dt)
    if n < 1 or abs(n * dt - duration) > GRID_TOLERANCE * max(1.0, duration):
        return None
    return n


@dataclass(frozen=True)
class SimulationScenario:
    """One closed-loop run.

    Attributes:
        platoon: Geometry and delay
        gains: RSU control gains
        disturbance: Leader disturbance profile
        t_end: Simulated horizon (s); must exceed the disturbance window end
        dt: Step (s) in (0, 0.05]; tau/dt must be an integer
        integrator: rk4 (default) or euler
        position_offset: Leader position x_0(0) (m)
    """

    platoon: PlatoonConfig
    gains: ControlGains
    disturbance: DisturbanceProfile = field(default_factory=DisturbanceProfile)
    t_end: float = 100.0
    dt: float = DEFAULT_DT
    integrator: Integrator = Integrator.RK4
    position_offset: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "integrator", Integrator(self.integrator))
        if not 0 < self.dt <= MAX_DT:
            raise ValidationError(f"dt must lie in (0, {MAX_DT}] s, got {self.dt}")
        if _steps(self.platoon.delay, self.dt) is None:
            raise ValidationError(
                f"delay not an integer multiple of dt: tau={self.platoon.delay}, dt={self.dt}"
            )
        if _steps(self.t_end, self.dt) is None:
            raise ValidationError(
                f"t_end not an integer multiple of dt: t_end={self.t_end}, dt={self.dt}"
            )
        if self.disturbance.kind is not DisturbanceKind.NONE and self.t_end <= self.disturbance.window[1]:
            raise ValidationError(
                f"t_end={self.t_end} must exceed the disturbance window end {self.disturbance.window[1]}"
            )

    @property
    def delay_steps(self) -> int:
        """k = tau / dt."""
        return round(self.platoon.delay / self.dt)

    @property
    def n_steps(self) -> int:
        """Number of integration steps up to t_end."""
        return round(self.t_end / self.dt)

    def initial_positions(self) -> np.ndarray:
        """x_i(0) = offset - i (h v_o + l) for i = 0..M."""
        idx = np.arange(self.platoon.n_vehicles, dtype=float)
        return self.position_offset - idx * self.platoon.desired_gap


def leader_rate_function(profile: DisturbanceProfile, v_o: float) -> Callable[[float, float], float]:
    """dv0/dt as a function of (t, v0), including the recovery regulator."""

    def rate(t: float, v0: float) -> float:
        if profile.contains(t):
            return leader_acceleration(profile, t)
        return -profile.recovery_gain * (v0 - v_o)

    return rate


def euler_step(
    t: float, dt: float, x: np.ndarray, v: np.ndarray, u: np.ndarray,
    leader_rate: Callable[[float, float], float],
) -> tuple[np.ndarray, np.ndarray]:
    """One explicit Euler step with the follower inputs u held constant."""
    a = np.empty_like(v)
    a[0] = leader_rate(t, v[0])
    a[1:] = u
    return x + dt * v, v + dt * a


def rk4_step(
    t: float, dt: float, x: np.ndarray, v: np.ndarray, u: np.ndarray,
    leader_rate: Callable[[float, float], float],
) -> tuple[np.ndarray, np.ndarray]:
    """One RK4 step; u is held constant, the leader rate is re-evaluated per stage."""

    def accel(ts: float, vs: np.ndarray) -> np.ndarray:
        a = np.empty_like(vs)
        a[0] = leader_rate(ts, vs[0])
        a[1:] = u
        return a

    half = 0.5 * dt
    k1x, k1v = v, accel(t, v)
    k2x, k2v = v + half * k1v, accel(t + half, v + half * k1v)
    k3x, k3v = v + half * k2v, accel(t + half, v + half * k2v)
    k4x, k4v = v + dt * k3v, accel(t + dt, v + dt * k3v)
    x_next = x + dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
    v_next = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    return x_next, v_next


_STEPPERS = {Integrator.RK4: rk4_step, Integrator.EULER: euler_step}


def simulate(scenario: SimulationScenario) -> Trajectory:
    """
    Integrate the platoon from the steady pre-history up to t_end.

    A non-finite state stops the run: the trajectory is truncated at the last
    finite sample and returned with ``diverged=True``.

    Args:
        scenario: Validated simulation scenario

    Returns:
        Trajectory sampled at every grid point in [0, t_end]
    """
    platoon = scenario.platoon
    dt = scenario.dt
    k = scenario.delay_steps
    n_steps = scenario.n_steps
    step = _STEPPERS[scenario.integrator]
    leader_rate = leader_rate_function(scenario.disturbance, platoon.target_velocity)

    x0 = scenario.initial_positions()
    history = HistoryBuffer(x0, platoon.target_velocity, dt, capacity=n_steps + 1)
    history.append(x0, np.full_like(x0, platoon.target_velocity))
    inputs = np.zeros((n_steps + 1, platoon.m_followers))

    logger.debug(
        f"Simulating M={platoon.m_followers}, tau={platoon.delay}, dt={dt}, "
        f"steps={n_steps}, integrator={scenario.integrator.value}"
    )

    diverged = False
    x, v = history.state_at_index(0)
    for n in range(n_steps):
        x_d, v_d = history.state_at_index(n - k)
        u = control_inputs(x_d, v_d, scenario.gains, platoon)
        inputs[n] = u
        x, v = step(n * dt, dt, x, v, u, leader_rate)
        if not (np.isfinite(x).all() and np.isfinite(v).all()):
            diverged = True
            logger.warning(f"Non-finite state at t={(n + 1) * dt:.4f}s; truncating trajectory")
            break
        history.append(x, v)

    size = len(history)
    if not diverged:
        x_d, v_d = history.state_at_index(size - 1 - k)
        inputs[size - 1] = control_inputs(x_d, v_d, scenario.gains, platoon)

    positions = history.positions.copy()
    gap = platoon.desired_gap
    errors = positions[:, 1:] - positions[:, :-1] + gap
    u_out = inputs[:size]
    if not np.isfinite(u_out).all():
        diverged = True

    return Trajectory(
        dt=dt,
        times=np.arange(size) * dt,
        x=positions,
        v=history.velocities.copy(),
        u=u_out,
        e=errors,
        headway=platoon.headway,
        target_velocity=platoon.target_velocity,
        standstill=platoon.standstill,
        diverged=diverged,
        metadata={
            "integrator": scenario.integrator.value,
            "delay_steps": k,
            "disturbance": scenario.disturbance.kind.value,
        },
    )
