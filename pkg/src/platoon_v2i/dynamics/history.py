"""
Delayed-state storage for the fixed-step integrator.

The buffer keeps every recorded grid sample (the trajectory needs them all
anyway) and answers queries for t < 0 with the steady pre-history of a
platoon cruising at v_o with zero spacing error.
"""

from __future__ import annotations

import logging

import numpy as np

from platoon_v2i.exceptions import HistoryUnderflowError, SimulationError

logger = logging.getLogger(__name__)

# Relative tolerance for deciding that a query time sits on the grid
GRID_TOLERANCE = 1e-9


class HistoryBuffer:
    """Per-vehicle (x, v) samples on a uniform grid plus analytic pre-history.

    Args:
        initial_positions: x_i(0) for vehicles 0..M
        target_velocity: v_o used by the pre-history
        dt: Grid step (s)
        capacity: Number of samples to preallocate
    """

    def __init__(
        self,
        initial_positions: np.ndarray,
        target_velocity: float,
        dt: float,
        capacity: int,
    ) -> None:
        self._x0 = np.asarray(initial_positions, dtype=float).copy()
        self._v_o = float(target_velocity)
        self._dt = float(dt)
        n_vehicles = len(self._x0)
        self._x = np.empty((capacity, n_vehicles))
        self._v = np.empty((capacity, n_vehicles))
        self._size = 0

    def __len__(self) -> int:
        return self._size

    @property
    def dt(self) -> float:
        """Grid step (s)."""
        return self._dt

    @property
    def positions(self) -> np.ndarray:
        """Recorded positions, shape (len, M + 1)."""
        return self._x[: self._size]

    @property
    def velocities(self) -> np.ndarray:
        """Recorded velocities, shape (len, M + 1)."""
        return self._v[: self._size]

    def append(self, x: np.ndarray, v: np.ndarray) -> None:
        """Record the state of the next grid point."""
        if self._size >= len(self._x):
            raise SimulationError(f"History capacity {len(self._x)} exhausted")
        self._x[self._size] = x
        self._v[self._size] = v
        self._size += 1

    def state_at_index(self, n: int) -> tuple[np.ndarray, np.ndarray]:
        """
        State at grid index n; negative indices map to the pre-history.

        Raises:
            HistoryUnderflowError: If n has not been recorded yet
        """
        if n < 0:
            t = n * self._dt
            return self._x0 + self._v_o * t, np.full_like(self._x0, self._v_o)
        if n >= self._size:
            raise HistoryUnderflowError(
                f"Grid index {n} requested but only {self._size} samples are recorded"
            )
        return self._x[n], self._v[n]

    def state_at(self, t: float) -> tuple[np.ndarray, np.ndarray]:
        """
        State at time t, which must land on a grid point.

        Raises:
            HistoryUnderflowError: If t is off-grid or beyond the recorded samples
        """
        n = round(t / self._dt)
        if abs(n * self._dt - t) > GRID_TOLERANCE * max(1.0, abs(t)):
            raise HistoryUnderflowError(f"Query time {t} is not on the dt={self._dt} grid")
        return self.state_at_index(n)
