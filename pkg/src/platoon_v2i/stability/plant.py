# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Plant-stability region G(tau) in the (lambda, eta) plane.

The region boundary is the D-curve

    lambda = w^2 cos(tau w),  eta = w sin(tau w),  w in (0, pi / (2 tau)),

closed by the corner point (0, pi / (2 tau)). A pair is plant-stable iff
eta < pi / (2 tau) and lambda < lambda*, where lambda* is the D-curve value
at the unique w* with w* sin(tau w*) = eta.

Usage:
    from platoon_v2i.core.types import LambdaEta
    from platoon_v2i.stability.plant import plant_stability_check

    verdict = plant_stability_check(LambdaEta(lam=0.477, eta=1.5498), tau=0.3)
    print(verdict.stable, verdict.witness)  # True 4.256...
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.optimize import bisect

from platoon_v2i.core.types import LambdaEta, StabilityVerdict
from platoon_v2i.exceptions import DomainError, NumericalError, ValidationError

logger = logging.getLogger(__name__)

BISECTION_MAX_ITER = 200
BISECTION_XTOL = 1e-12

CRITERION = "plant-dcurve"


@dataclass(frozen=True)
class DCurvePoint:
    """One point of the D-curve: frequency w (rad/s) and its (lambda, eta)."""

    w: float
    lam: float
    eta: float


def corner_eta(tau: float) -> float:
    """eta of the corner point (0, pi / (2 tau))."""
    if not tau > 0:
        raise ValidationError(f"tau must be positive, got {tau}")
    return math.pi / (2.0 * tau)


def dcurve_point(w: float, tau: float) -> DCurvePoint:
    """
    D-curve parameterisation at frequency w.

    Raises:
        DomainError: If w lies outside (0, pi / (2 tau))
    """
    w_corner = corner_eta(tau)
    if not 0 < w < w_corner:
        raise DomainError(f"w must lie in (0, {w_corner:.6g}) for tau={tau}, got {w}")
    return DCurvePoint(w=w, lam=w * w * math.cos(tau * w), eta=w * math.sin(tau * w))


def solve_dcurve_frequency(eta: float, tau: float) -> float:
    """
    The unique w* in (0, pi / (2 tau)) with w* sin(tau w*) = eta.

    w sin(tau w) is strictly increasing on that interval, so bisection on the
    full interval always brackets the root.

    Raises:
        DomainError: If eta is outside (0, pi / (2 tau))
        NumericalError: If bisection fails to converge
    """
    w_corner = corner_eta(tau)
    if not 0 < eta < w_corner:
        raise DomainError(f"eta must lie in (0, {w_corner:.6g}) for tau={tau}, got {eta}")

    def residual(w: float) -> float:
        return w * math.sin(tau * w) - eta

    try:
        w_star = bisect(residual, 0.0, w_corner, xtol=BISECTION_XTOL, maxiter=BISECTION_MAX_ITER)
    except RuntimeError as e:
        raise NumericalError(f"Bisection for eta={eta}, tau={tau} did not converge: {e}") from e
    return float(w_star)


def plant_stability_check(le: LambdaEta, tau: float) -> StabilityVerdict:
    """
    Membership of (lambda, eta) in the plant-stability region G(tau).

    Returns:
        Verdict with margin lambda* - lambda and witness lambda*. Beyond the
        corner (eta >= pi / (2 tau)) lambda* is 0. The boundary itself is
        unstable (a purely imaginary root exists there).
    """
    if not tau > 0:
        raise ValidationError(f"tau must be positive, got {tau}")

    if le.eta >= corner_eta(tau):
        logger.debug(f"eta={le.eta} beyond corner {corner_eta(tau):.6g}: unstable")
        return StabilityVerdict(stable=False, margin=-le.lam, witness=0.0, criterion=CRITERION)

    w_star = solve_dcurve_frequency(le.eta, tau)
    lam_star = w_star * w_star * math.cos(tau * w_star)
    margin = lam_star - le.lam
    logger.debug(f"w*={w_star:.12g}, lambda*={lam_star:.12g}, margin={margin:.6g}")
    return StabilityVerdict(
        stable=margin > 0,
        margin=margin,
        witness=lam_star,
        criterion=CRITERION,
    )


def plant_region_boundary(tau: float, n_points: int = 200) -> list[DCurvePoint]:
    """
    D-curve samples from (0, 0) to the corner (0, pi / (2 tau)), both included.

    Interior points are evenly spaced in w; the endpoints are set exactly.
    """
    if n_points < 2:
        raise ValidationError(f"n_points must be >= 2, got {n_points}")
    w_corner = corner_eta(tau)
    points = [DCurvePoint(w=0.0, lam=0.0, eta=0.0)]
    for w in np.linspace(0.0, w_corner, n_points)[1:-1]:
        points.append(dcurve_point(float(w), tau))
    points.append(DCurvePoint(w=w_corner, lam=0.0, eta=w_corner))
    return points


def region_boundary_frame(tau: float, n_points: int = 200) -> pd.DataFrame:
    """Boundary samples as a DataFrame with columns w, lambda, eta."""
    points = plant_region_boundary(tau, n_points)
    return pd.DataFrame(
        {
            "w": [p.w for p in points],
            "lambda": [p.lam for p in points],
            "eta": [p.eta for p in points],
        }
    )


def crossing_direction(w: float, tau: float) -> tuple[float, float]:
    """
    Real-part sensitivities (d xi / d eta, d xi / d lambda) of the root s = jw
    sitting on the D-curve point at w.

    d xi / d lambda is positive along the whole curve (increasing lambda
    destabilises); d xi / d eta is positive iff eta > 2 cos(tau w) / tau.
    """
    p = dcurve_point(w, tau)
    s = 1j * w
    delay = np.exp(-tau * s)
    d_theta = 2.0 * s + p.eta * delay - tau * (p.eta * s + p.lam) * delay
    ds_deta = -s * delay / d_theta
    ds_dlam = -delay / d_theta
    return float(ds_deta.real), float(ds_dlam.real)
