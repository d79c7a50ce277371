# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Parameter sweeps around a base simulation.

Every grid point is an independent run: verdicts, peak spacing errors and
settling time. Points may execute in worker processes; each writes its own
row file and the rows are merged in grid order at the end, so the merged CSV
does not depend on scheduling.

Usage:
    spec = SweepSpec(base=scenario, axes={"delay": (0.1, 0.3)})
    report = run_sweep(spec, out_dir=Path("out/fig8"), jobs=2)
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from platoon_v2i.dynamics.metrics import peak_spacing_errors, settling_time
from platoon_v2i.dynamics.simulator import SimulationScenario, simulate
from platoon_v2i.exceptions import PlatoonError, SimulationError, ValidationError
from platoon_v2i.scenarios.artifacts import write_artifact
from platoon_v2i.schema.loader import load_schema
from platoon_v2i.stability.plant import plant_stability_check
from platoon_v2i.stability.string import (
    FrequencySweepConfig,
    string_stability_exact,
    string_stability_sufficient,
)

logger = logging.getLogger(__name__)

GAIN_AXES = ("k_x", "k_v", "k_vo", "k_xo")
PLATOON_AXES = ("delay", "headway", "m_followers")
PEAK_PREFIX = "peak_e_"


@dataclass(frozen=True)
class SweepSpec:
    """Base scenario and the values of each swept parameter."""

    base: SimulationScenario
    axes: dict[str, tuple[float, ...]] = field(default_factory=dict)
    settling_tol: float = 1e-3
    sweep_step: float = 1e-3

    def __post_init__(self) -> None:
        unknown = set(self.axes) - set(GAIN_AXES) - set(PLATOON_AXES)
        if unknown:
            raise ValidationError(f"Unknown sweep axes {sorted(unknown)}")

    def points(self) -> Iterator[dict[str, float]]:
        """Grid points in Cartesian-product order; an empty axis gives no points."""
        names = list(self.axes)
        if not names:
            return iter(())
        return (dict(zip(names, combo)) for combo in itertools.product(*self.axes.values()))

    def max_followers(self) -> int:
        """Largest M over the grid."""
        values = self.axes.get("m_followers", (self.base.platoon.m_followers,))
        return int(max(values, default=self.base.platoon.m_followers))


def apply_point(base: SimulationScenario, point: dict[str, float]) -> SimulationScenario:
    """Scenario for one grid point (re-validated)."""
    gains = replace(base.gains, **{k: v for k, v in point.items() if k in GAIN_AXES})
    platoon_changes: dict[str, Any] = {k: v for k, v in point.items() if k in PLATOON_AXES}
    if "m_followers" in platoon_changes:
        platoon_changes["m_followers"] = int(platoon_changes["m_followers"])
    platoon = replace(base.platoon, **platoon_changes)
    return replace(base, gains=gains, platoon=platoon)


def evaluate_point(
    index: int,
    base: SimulationScenario,
    point: dict[str, float],
    settling_tol: float,
    sweep_step: float,
) -> dict[str, Any]:
    """One sweep row; failures are recorded in the error column."""
    row: dict[str, Any] = {
        "index": index,
        "k_v": point.get("k_v", base.gains.k_v),
        "k_vo": point.get("k_vo", base.gains.k_vo),
        "k_x": point.get("k_x", base.gains.k_x),
        "k_xo": point.get("k_xo", base.gains.k_xo),
        "delay": point.get("delay", base.platoon.delay),
        "headway": point.get("headway", base.platoon.headway),
        "m_followers": int(point.get("m_followers", base.platoon.m_followers)),
        "error": "",
    }
    try:
        scenario = apply_point(base, point)
        platoon, gains = scenario.platoon, scenario.gains
        le = gains.lambda_eta(platoon.headway)
        plant = plant_stability_check(le, platoon.delay)
        sufficient = string_stability_sufficient(gains, platoon.headway, platoon.delay)
        exact = string_stability_exact(
            gains,
            platoon.headway,
            platoon.delay,
            FrequencySweepConfig.for_gains(gains, platoon.headway, step=sweep_step),
        )
        traj = simulate(scenario)
    except PlatoonError as e:
        logger.warning(f"Sweep point {index} {point} failed: {e}")
        row["error"] = str(e)
        return row

    row.update(
        {
            "lambda": le.lam,
            "eta": le.eta,
            "plant_stable": plant.stable,
            "plant_margin": plant.margin,
            "string_sufficient": sufficient.stable,
            "string_exact": exact.stable,
            "string_witness": exact.witness,
            "settling_time": settling_time(traj, settling_tol),
            "diverged": traj.diverged,
        }
    )
    for i, peak in enumerate(peak_spacing_errors(traj), start=1):
        row[f"{PEAK_PREFIX}{i}"] = float(peak)
    return row


def _row_path(rows_dir: Path, index: int) -> Path:
    return rows_dir / f"row_{index:05d}.csv"


def _evaluate_and_store(
    index: int,
    base: SimulationScenario,
    point: dict[str, float],
    settling_tol: float,
    sweep_step: float,
    rows_dir: Path | None,
) -> dict[str, Any] | None:
    row = evaluate_point(index, base, point, settling_tol, sweep_step)
    if rows_dir is None:
        return row
    pd.DataFrame([row]).to_csv(_row_path(rows_dir, index), index=False, float_format="%.17g")
    return None


def load_row_files(rows_dir: Path, count: int) -> list[dict[str, Any]]:
    """
    Read back the row files of grid points 0..count-1.

    Raises:
        SimulationError: If a row file is missing
    """
    rows = []
    for index in range(count):
        path = _row_path(rows_dir, index)
        if not path.exists():
            raise SimulationError(f"Sweep row file {path} is missing")
        row = pd.read_csv(path).iloc[0].to_dict()
        if pd.isna(row.get("error")):
            row["error"] = ""
        rows.append(row)
    return rows


def run_sweep(spec: SweepSpec, out_dir: Path | None = None, jobs: int = 1) -> pd.DataFrame:
    """
    Evaluate every grid point and return the merged report in grid order.

    Args:
        spec: Sweep specification
        out_dir: If given, each point writes out_dir/rows/row_<index>.csv and
                 the merged report is built from those files into
                 out_dir/sweep.csv
        jobs: Worker processes; 1 runs in-process

    Returns:
        DataFrame in sweep_report schema order (empty with header if the grid is empty)
    """
    if jobs < 1:
        raise ValidationError(f"jobs must be >= 1, got {jobs}")

    points = list(spec.points())
    rows_dir = None
    if out_dir is not None:
        rows_dir = Path(out_dir) / "rows"
        rows_dir.mkdir(parents=True, exist_ok=True)

    logger.info(f"Sweeping {len(points)} points over {list(spec.axes)} with {jobs} job(s)")
    args = [
        (i, spec.base, point, spec.settling_tol, spec.sweep_step, rows_dir)
        for i, point in enumerate(points)
    ]
    if jobs == 1 or len(points) <= 1:
        results = [_evaluate_and_store(*a) for a in args]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate_and_store, *zip(*args)))
    rows = load_row_files(rows_dir, len(points)) if rows_dir is not None else results

    report = merge_rows(rows, spec.max_followers())
    if out_dir is not None:
        write_artifact(report, Path(out_dir) / "sweep.csv", "sweep_report", spec.max_followers())
    return report


def merge_rows(rows: list[dict[str, Any]], max_followers: int) -> pd.DataFrame:
    """Rows sorted by grid index, every schema column present."""
    columns = load_schema("sweep_report").expand_columns(max_followers)
    ordered = sorted(rows, key=lambda r: r["index"])
    report = pd.DataFrame(ordered, columns=columns)
    if report.empty:
        return report
    report["index"] = report["index"].astype(np.int64)
    report["m_followers"] = report["m_followers"].astype(np.int64)
    return report
