# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
RSU control law, spacing error and leader disturbance.

The control law uses only the delayed state of follower i, its predecessor
and the leader:

    u_i(t) = -K_x (x_i - x_{i-1} + h v_i + l)
             -K_v (v_i - v_{i-1})
             -K_vo (v_i - v_o)
             -K_xo (x_i - x_0 + i h v_o + i l)

with every state evaluated at t - tau. The K_x bracket uses h*v_i (not h*v_o);
the reported spacing error uses h*v_o.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np

from platoon_v2i.core.types import ControlGains, DisturbanceKind, DisturbanceProfile, PlatoonConfig

if TYPE_CHECKING:
    from platoon_v2i.dynamics.history import HistoryBuffer
    from platoon_v2i.dynamics.simulator import SimulationScenario


def spacing_error(x_i: float, x_prev: float, h: float, v_o: float, l: float) -> float:  # noqa: E741
    """Gap deviation x_i - x_prev + h*v_o + l (m); zero at the desired gap."""
    return x_i - x_prev + h * v_o + l


def leader_acceleration(profile: DisturbanceProfile, t: float) -> float:
    """
    External disturbance acceleration of the leader at time t.

    Sinusoid returns -sin(t) inside the closed window; piecewise returns the
    value of the segment containing t (first segment closed, later segments
    left-open); outside the window, and for kind none, the result is 0.
    """
    if not profile.contains(t):
        return 0.0
    if profile.kind is DisturbanceKind.SINUSOID:
        return -math.sin(t)

    first = profile.segments[0]
    if first.start <= t <= first.end:
        return first.acceleration
    for segment in profile.segments[1:]:
        if segment.start < t <= segment.end:
            return segment.acceleration
    return 0.0


def control_inputs(
    x_delayed: np.ndarray,
    v_delayed: np.ndarray,
    gains: ControlGains,
    platoon: PlatoonConfig,
) -> np.ndarray:
    """
    Control inputs of all followers from one delayed platoon state.

    Args:
        x_delayed: Positions x_0..x_M at t - tau
        v_delayed: Velocities v_0..v_M at t - tau
        gains: Control gains
        platoon: Platoon configuration (h, l, v_o)

    Returns:
        Array of M accelerations u_1..u_M (m/s^2)
    """
    h = platoon.headway
    l = platoon.standstill  # noqa: E741
    v_o = platoon.target_velocity
    idx = np.arange(1, platoon.m_followers + 1, dtype=float)

    x_i, x_prev, x_0 = x_delayed[1:], x_delayed[:-1], x_delayed[0]
    v_i, v_prev = v_delayed[1:], v_delayed[:-1]

    return (
        -gains.k_x * (x_i - x_prev + h * v_i + l)
        - gains.k_v * (v_i - v_prev)
        - gains.k_vo * (v_i - v_o)
        - gains.k_xo * (x_i - x_0 + idx * h * v_o + idx * l)
    )


def control_input(
    history: HistoryBuffer,
    i: int,
    t: float,
    scenario: SimulationScenario,
) -> float:
    """
    Control input u_i(t) of follower i from the stored history.

    Raises:
        ValueError: If i is not a follower index in [1, M]
        HistoryUnderflowError: If t - tau is not covered by the history
    """
    platoon = scenario.platoon
    if not 1 <= i <= platoon.m_followers:
        raise ValueError(f"Follower index must be in [1, {platoon.m_followers}], got {i}")

    x_d, v_d = history.state_at(t - platoon.delay)
    return float(control_inputs(x_d, v_d, scenario.gains, platoon)[i - 1])
