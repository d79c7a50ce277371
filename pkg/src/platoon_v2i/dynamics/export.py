"""
Trajectory CSV export.

Header: t, x_0..x_M, v_0..v_M, u_1..u_M, e_1..e_M; one row per grid point,
floats written with %.17g so a read-back reproduces every value exactly.
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

import numpy as np
import pandas as pd

from platoon_v2i.core.types import Trajectory
from platoon_v2i.exceptions import ValidationError

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"


def trajectory_columns(m_followers: int) -> list[str]:
    """Ordered CSV header for a platoon with M followers."""
    return (
        ["t"]
        + [f"x_{i}" for i in range(m_followers + 1)]
        + [f"v_{i}" for i in range(m_followers + 1)]
        + [f"u_{i}" for i in range(1, m_followers + 1)]
        + [f"e_{i}" for i in range(1, m_followers + 1)]
    )


def write_trajectory_csv(traj: Trajectory, path: Path) -> Path:
    """Write the trajectory to path (parents created)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    traj.to_frame().to_csv(path, index=False, float_format=FLOAT_FORMAT)
    logger.debug(f"Wrote {len(traj)} rows to {path}")
    return path


def read_trajectory_csv(
    path: Path,
    headway: float,
    target_velocity: float,
    standstill: float,
) -> Trajectory:
    """
    Load a trajectory CSV written by `write_trajectory_csv`.

    Raises:
        ValidationError: If the header does not match the trajectory layout
    """
    df = pd.read_csv(path, float_precision="round_trip")
    m = sum(1 for col in df.columns if re.fullmatch(r"e_\d+", col))
    expected = trajectory_columns(m)
    if list(df.columns) != expected:
        raise ValidationError(f"{path}: unexpected trajectory header {list(df.columns)}")

    times = df["t"].to_numpy(dtype=float)
    dt = float(times[1] - times[0]) if len(times) > 1 else 0.0

    def block(prefix: str, start: int, stop: int) -> np.ndarray:
        return df[[f"{prefix}_{i}" for i in range(start, stop)]].to_numpy(dtype=float)

    return Trajectory(
        dt=dt,
        times=times,
        x=block("x", 0, m + 1),
        v=block("v", 0, m + 1),
        u=block("u", 1, m + 1),
        e=block("e", 1, m + 1),
        headway=headway,
        target_velocity=target_velocity,
        standstill=standstill,
    )
