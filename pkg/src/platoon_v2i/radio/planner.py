# ADR: 2026-10-01-delay-aware-platoon-toolkit
# ADR: 2026-10-12-link-budget-calibration
"""
Handover planning for a platoon crossing RSU coverage.

    D_platoon = M h v + M l
    T_stay    = (2 ell_th - D_platoon) / v
    v_max     = (2 ell_th - M l) / (M h + 1 / f_handover)
    ISLD_max  = 2 ell_th - D_platoon

ell_th always uses the leader's transmit power: the leader leaves the
coverage first.

Usage:
    from platoon_v2i.core.presets import HANDOVER_PLATOON, HANDOVER_RADIO
    from platoon_v2i.radio.planner import max_platoon_velocity

    print(max_platoon_velocity(HANDOVER_PLATOON, HANDOVER_RADIO))  # ~38.56 m/s
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import pandas as pd
from scipy.optimize import minimize_scalar

from platoon_v2i.core.types import PlatoonConfig, RadioParams
from platoon_v2i.exceptions import (
    CoverageInfeasibleError,
    NoFeasibleVelocityError,
    PlatoonDoesNotFitError,
    RadioPlanningError,
    ValidationError,
)
from platoon_v2i.radio.link_budget import CoverageResult, longitudinal_range

logger = logging.getLogger(__name__)

MAX_ANTENNAS = 1024
OFFSET_BOUNDS_DB = (0.0, 20.0)

PLANNER_COLUMNS = [
    "fc", "Rth", "f_handover", "d_th", "ell_th", "D_platoon", "v_max", "T_stay", "isld_max",
]


def platoon_length(pc: PlatoonConfig, velocity: float | None = None) -> float:
    """M h v + M l (m); v defaults to the target velocity and may be 0."""
    v = pc.target_velocity if velocity is None else velocity
    if v < 0:
        raise ValidationError(f"Velocity must be non-negative, got {v}")
    return pc.m_followers * pc.headway * v + pc.m_followers * pc.standstill


def _feasible(cov: CoverageResult) -> CoverageResult:
    if not cov.feasible:
        raise CoverageInfeasibleError(f"Coverage radius {cov.d_th:.4g} m does not reach the lane")
    return cov


def stay_time(pc: PlatoonConfig, cov: CoverageResult) -> float:
    """
    Time (s) the whole platoon stays inside one RSU's coverage chord.

    Raises:
        CoverageInfeasibleError: If the coverage does not reach the lane
        PlatoonDoesNotFitError: If D_platoon >= 2 ell_th
    """
    chord = 2.0 * _feasible(cov).ell_th
    length = platoon_length(pc)
    if chord - length <= 0:
        raise PlatoonDoesNotFitError(
            f"Platoon length {length:.4g} m does not fit the coverage chord {chord:.4g} m"
        )
    return (chord - length) / pc.target_velocity


def max_platoon_velocity(pc: PlatoonConfig, rp: RadioParams) -> float:
    """
    Largest v_o for which the stay time is at least 1 / f_handover.

    pc.target_velocity is ignored.

    Raises:
        CoverageInfeasibleError: If the coverage does not reach the lane
        NoFeasibleVelocityError: If the bound is not positive
    """
    cov = _feasible(longitudinal_range(rp))
    numerator = 2.0 * cov.ell_th - pc.m_followers * pc.standstill
    denominator = pc.m_followers * pc.headway + 1.0 / rp.handover_freq_hz
    v_max = numerator / denominator
    if v_max <= 0:
        raise NoFeasibleVelocityError(
            f"Standstill length {pc.m_followers * pc.standstill:.4g} m exceeds the "
            f"coverage chord {2.0 * cov.ell_th:.4g} m"
        )
    return v_max


def max_isld(pc: PlatoonConfig, rp: RadioParams) -> float:
    """
    Largest inter-site longitudinal distance keeping dual connectivity (m).

    Raises:
        CoverageInfeasibleError: If the coverage does not reach the lane
        PlatoonDoesNotFitError: If the platoon is longer than 2 ell_th
    """
    cov = _feasible(longitudinal_range(rp))
    isld = 2.0 * cov.ell_th - platoon_length(pc)
    if isld < 0:
        raise PlatoonDoesNotFitError(
            f"Platoon length {platoon_length(pc):.4g} m exceeds the dual-connectivity span "
            f"{2.0 * cov.ell_th:.4g} m"
        )
    return isld


@dataclass(frozen=True)
class PlanRow:
    """One planner report row; the platoon is evaluated at v_max."""

    fc: float
    Rth: float
    f_handover: float
    d_th: float
    ell_th: float
    D_platoon: float
    v_max: float
    T_stay: float
    isld_max: float


def plan_row(pc: PlatoonConfig, rp: RadioParams) -> PlanRow:
    """Evaluate one (f_c, f_handover) cell with the platoon travelling at v_max."""
    cov = _feasible(longitudinal_range(rp))
    v_max = max_platoon_velocity(pc, rp)
    at_vmax = pc.with_updates(target_velocity=v_max)
    return PlanRow(
        fc=rp.carrier_freq_hz,
        Rth=rp.rate_threshold_bps,
        f_handover=rp.handover_freq_hz,
        d_th=cov.d_th,
        ell_th=cov.ell_th,
        D_platoon=platoon_length(at_vmax),
        v_max=v_max,
        T_stay=stay_time(at_vmax, cov),
        isld_max=max_isld(at_vmax, rp),
    )


def plan_table(
    pc: PlatoonConfig,
    rp: RadioParams,
    carrier_freqs: Iterable[float],
    handover_freqs: Iterable[float],
) -> pd.DataFrame:
    """Planner report over the (f_c, f_handover) grid, carrier-major order."""
    handover = list(handover_freqs)
    rows = [
        plan_row(pc, rp.with_updates(carrier_freq_hz=fc, handover_freq_hz=fh))
        for fc in carrier_freqs
        for fh in handover
    ]
    logger.info(f"Planned {len(rows)} (f_c, f_handover) cells")
    return pd.DataFrame([vars(r) for r in rows], columns=PLANNER_COLUMNS)


def min_antennas(pc: PlatoonConfig, rp: RadioParams, v_target: float) -> int:
    """
    Smallest N whose v_max reaches v_target (scan from M + 2 up to 1024).

    Raises:
        NoFeasibleVelocityError: If no N up to the cap reaches v_target
    """
    if not v_target > 0:
        raise ValidationError(f"v_target must be positive, got {v_target}")
    for n in range(rp.m_followers + 2, MAX_ANTENNAS + 1):
        try:
            v_max = max_platoon_velocity(pc, rp.with_updates(n_antennas=n))
        except RadioPlanningError:
            continue
        if v_max >= v_target:
            logger.debug(f"N={n} reaches v_max={v_max:.4g} >= {v_target}")
            return n
    raise NoFeasibleVelocityError(f"No N <= {MAX_ANTENNAS} reaches {v_target} m/s")


@dataclass(frozen=True)
class LinkBudgetFit:
    """Fitted noise-figure offset and the per-cell velocity residuals (m/s)."""

    offset_db: float
    residuals: dict[tuple[float, float], float]

    @property
    def max_abs_error(self) -> float:
        return max(abs(r) for r in self.residuals.values())


def fit_link_budget_offset(
    pc: PlatoonConfig,
    rp: RadioParams,
    reported: Mapping[tuple[float, float], float],
) -> LinkBudgetFit:
    """
    Single noise-figure offset (dB) minimising the squared v_max error.

    Args:
        pc: Platoon geometry (M, h, l)
        rp: Radio parameters; carrier and handover frequencies are overridden
        reported: Reference v_max (m/s) keyed by (f_c, f_handover)
    """
    if not reported:
        raise ValidationError("Need at least one reference velocity to fit an offset")

    def predicted(offset_db: float) -> dict[tuple[float, float], float]:
        out = {}
        for fc, fh in reported:
            cell = rp.with_updates(carrier_freq_hz=fc, handover_freq_hz=fh, noise_figure_db=offset_db)
            try:
                out[(fc, fh)] = max_platoon_velocity(pc, cell)
            except RadioPlanningError:
                out[(fc, fh)] = 0.0
        return out

    def loss(offset_db: float) -> float:
        pred = predicted(offset_db)
        return sum((pred[key] - value) ** 2 for key, value in reported.items())

    result = minimize_scalar(loss, bounds=OFFSET_BOUNDS_DB, method="bounded", options={"xatol": 1e-6})
    offset = float(result.x)
    pred = predicted(offset)
    residuals = {key: pred[key] - value for key, value in reported.items()}
    logger.info(f"Fitted link-budget offset {offset:.4f} dB over {len(reported)} cells")
    return LinkBudgetFit(offset_db=offset, residuals=residuals)
