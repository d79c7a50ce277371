"""Summary metrics over simulated trajectories."""

from __future__ import annotations

import numpy as np

from platoon_v2i.core.types import Trajectory
from platoon_v2i.exceptions import ValidationError


def peak_spacing_errors(traj: Trajectory) -> np.ndarray:
    """Max over time of |e_i(t)| for each follower, shape (M,)."""
    if len(traj) == 0:
        raise ValidationError("Cannot compute peak spacing errors of an empty trajectory")
    return np.max(np.abs(traj.e), axis=0)


def settling_time(traj: Trajectory, tol: float) -> float | None:
    """
    Earliest t* with |e_i(t)| < tol for every follower and every t >= t*.

    Returns None if the errors never settle inside the simulated horizon,
    including truncated (diverged) runs.
    """
    if not tol > 0:
        raise ValidationError(f"tol must be positive, got {tol}")
    if len(traj) == 0 or traj.diverged:
        return None

    outside = ~np.all(np.abs(traj.e) < tol, axis=1)
    if not outside.any():
        return float(traj.times[0])
    last_outside = int(np.flatnonzero(outside)[-1])
    if last_outside == len(traj) - 1:
        return None
    return float(traj.times[last_outside + 1])


def post_window_envelope(traj: Trajectory, t_from: float, window: float = 10.0) -> np.ndarray:
    """
    Max |e| over all followers in consecutive windows starting at t_from.

    Used to check that the error envelope decays after the disturbance.
    """
    if window <= 0:
        raise ValidationError(f"window must be positive, got {window}")
    abs_e = np.max(np.abs(traj.e), axis=1)
    edges = np.arange(t_from, traj.t_end + 1e-12, window)
    peaks = []
    for lo, hi in zip(edges[:-1], edges[1:]):
        mask = (traj.times >= lo) & (traj.times < hi)
        if mask.any():
            peaks.append(float(abs_e[mask].max()))
    return np.asarray(peaks)
