# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
String stability of the spacing-error transfer H(s) between followers.

|H(jw)|^2 = (K_v^2 w^2 + K_x^2) / (Xi(w) + K_v^2 w^2 + K_x^2), so |H| < 1 at
every w > 0 iff Xi(w) > 0 there, with

    Xi(w) = w^4 - 2 eta sin(tau w) w^3 + (C - 2 lambda cos(tau w)) w^2
            + K_xo^2 + 2 K_x K_xo,
    C = K_x^2 h^2 + 2 K_x (K_v + K_vo) h + K_vo^2 + 2 K_v K_vo.

Two decisions are offered: the closed-form sufficient condition
(lambda <= K_v K_vo and eta <= 1 / (2 tau)) and an exact frequency sweep on
(0, w_max] where beyond w_max a polynomial lower bound keeps Xi positive.

Usage:
    from platoon_v2i.core.presets import REFERENCE_GAINS
    from platoon_v2i.stability.string import string_stability_exact

    verdict = string_stability_exact(REFERENCE_GAINS["fig4"], h=0.2, tau=0.3)
    print(verdict.stable, verdict.witness)
"""

from __future__ import annotations

import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import pandas as pd

from platoon_v2i.core.types import ControlGains, StabilityVerdict, derive_lambda_eta
from platoon_v2i.exceptions import NoFeasibleHeadwayError, PoleProximityWarning, ValidationError

logger = logging.getLogger(__name__)

DEFAULT_SWEEP_STEP = 1e-3
POLE_THRESHOLD = 1e-12

ArrayOrFloat = float | npt.NDArray[np.float64]


def _w2_coefficient(gains: ControlGains, h: float) -> float:
    """C: the gain-only part of the w^2 coefficient of Xi."""
    k_x, k_v, k_vo = gains.k_x, gains.k_v, gains.k_vo
    return k_x**2 * h**2 + 2.0 * k_x * (k_v + k_vo) * h + k_vo**2 + 2.0 * k_v * k_vo


def tail_bound(gains: ControlGains, h: float) -> float:
    """w beyond which Xi(w) >= w^4 - 2 eta w^3 - (2 lambda + |C|) w^2 > 0."""
    le = derive_lambda_eta(gains, h)
    C = _w2_coefficient(gains, h)
    return 2.0 * (le.eta + 1.0 + math.sqrt(2.0 * le.lam + abs(C)))


@dataclass(frozen=True)
class FrequencySweepConfig:
    """Uniform frequency grid w_min, w_min + step, ..., up to w_max (rad/s)."""

    w_min: float
    w_max: float
    step: float = DEFAULT_SWEEP_STEP

    def __post_init__(self) -> None:
        if not self.w_min > 0:
            raise ValidationError(f"w_min must be positive, got {self.w_min}")
        if not self.step > 0:
            raise ValidationError(f"step must be positive, got {self.step}")
        if not self.w_max > self.w_min:
            raise ValidationError(f"w_max must exceed w_min, got [{self.w_min}, {self.w_max}]")

    @classmethod
    def for_gains(
        cls, gains: ControlGains, h: float, step: float = DEFAULT_SWEEP_STEP
    ) -> FrequencySweepConfig:
        """Sweep from one step up to the tail bound of these gains."""
        return cls(w_min=step, w_max=tail_bound(gains, h), step=step)

    def grid(self) -> np.ndarray:
        """Sweep frequencies, w_max included."""
        n = int(math.floor((self.w_max - self.w_min) / self.step + 1e-9))
        w = self.w_min + self.step * np.arange(n + 1)
        if w[-1] < self.w_max:
            w = np.append(w, self.w_max)
        return w


def string_stability_sufficient(gains: ControlGains, h: float, tau: float) -> StabilityVerdict:
    """
    Closed-form sufficient string condition.

    Stable iff lambda <= K_v K_vo and eta <= 1 / (2 tau); the margin is the
    smaller of the two slacks.
    """
    if not (h > 0 and tau > 0):
        raise ValidationError(f"h and tau must be positive, got h={h}, tau={tau}")
    le = derive_lambda_eta(gains, h)
    lam_slack = gains.k_v * gains.k_vo - le.lam
    eta_slack = 1.0 / (2.0 * tau) - le.eta
    margin = min(lam_slack, eta_slack)
    return StabilityVerdict(stable=margin >= 0, margin=margin, criterion="string-sufficient")


def max_headway(gains: ControlGains, tau: float) -> float:
    """
    Largest headway for which the eta clause of the sufficient condition holds.

    Raises:
        NoFeasibleHeadwayError: If K_v + K_vo >= 1 / (2 tau)
    """
    if not tau > 0:
        raise ValidationError(f"tau must be positive, got {tau}")
    slack = 1.0 / (2.0 * tau) - gains.k_v - gains.k_vo
    if slack <= 0:
        raise NoFeasibleHeadwayError(
            f"No positive headway: K_v + K_vo = {gains.k_v + gains.k_vo:.6g} "
            f">= 1/(2 tau) = {1.0 / (2.0 * tau):.6g}"
        )
    return slack / gains.k_x


def xi(w: ArrayOrFloat, gains: ControlGains, h: float, tau: float) -> ArrayOrFloat:
    """Xi(w); vectorised over w."""
    le = derive_lambda_eta(gains, h)
    C = _w2_coefficient(gains, h)
    w2 = np.square(w)
    value = (
        w2 * w2
        - 2.0 * le.eta * np.sin(tau * w) * w2 * w
        + (C - 2.0 * le.lam * np.cos(tau * w)) * w2
        + gains.k_xo**2
        + 2.0 * gains.k_x * gains.k_xo
    )
    return float(value) if np.ndim(value) == 0 else value


def _magnitude(w: np.ndarray, gains: ControlGains, h: float, tau: float) -> tuple[np.ndarray, np.ndarray]:
    num = gains.k_v**2 * np.square(w) + gains.k_x**2
    den = np.asarray(xi(w, gains, h, tau)) + num
    with np.errstate(divide="ignore", invalid="ignore"):
        mag = np.where(den > 0, np.sqrt(num / np.where(den > 0, den, 1.0)), np.inf)
    return mag, den


def transfer_magnitude(w: float, gains: ControlGains, h: float, tau: float) -> float:
    """
    |H(jw)| of the spacing-error transfer between consecutive followers.

    Emits PoleProximityWarning when |Theta(jw)|^2 < 1e-12 (the gains sit on
    the plant-stability boundary at this frequency).
    """
    if w < 0:
        raise ValidationError(f"w must be non-negative, got {w}")
    mag, den = _magnitude(np.asarray([w], dtype=float), gains, h, tau)
    if den[0] < POLE_THRESHOLD:
        warnings.warn(
            f"|Theta(jw)|^2 = {den[0]:.3g} near zero at w={w}", PoleProximityWarning, stacklevel=2
        )
    return float(mag[0])


def frequency_response(
    gains: ControlGains,
    h: float,
    tau: float,
    sweep: FrequencySweepConfig | None = None,
) -> pd.DataFrame:
    """|H(jw)| over the sweep grid as a DataFrame with columns w, magnitude."""
    sweep = sweep or FrequencySweepConfig.for_gains(gains, h)
    w = sweep.grid()
    mag, den = _magnitude(w, gains, h, tau)
    if (den < POLE_THRESHOLD).any():
        warnings.warn(
            f"|Theta(jw)|^2 near zero at {int((den < POLE_THRESHOLD).sum())} sweep points",
            PoleProximityWarning,
            stacklevel=2,
        )
    return pd.DataFrame({"w": w, "magnitude": mag})


def h_infinity_norm(
    gains: ControlGains,
    h: float,
    tau: float,
    sweep: FrequencySweepConfig | None = None,
) -> tuple[float, float]:
    """Peak |H(jw)| over the sweep and the frequency where it occurs."""
    response = frequency_response(gains, h, tau, sweep)
    idx = int(response["magnitude"].to_numpy().argmax())
    return float(response["magnitude"].iloc[idx]), float(response["w"].iloc[idx])


def string_stability_exact(
    gains: ControlGains,
    h: float,
    tau: float,
    sweep: FrequencySweepConfig | None = None,
) -> StabilityVerdict:
    """
    Exact string verdict from a sweep of Xi over (0, w_max].

    Stable iff Xi > 0 at every sweep point; the tail bound covers w > w_max.
    Margin is 1 - max |H| over the sweep, so a stable verdict always has a
    positive margin. The witness of an unstable verdict is the first frequency
    with Xi <= 0, or the peak of |H| when only the magnitude reaches 1.

    Raises:
        ValidationError: If the sweep stops short of the tail bound
    """
    bound = tail_bound(gains, h)
    sweep = sweep or FrequencySweepConfig.for_gains(gains, h)
    if sweep.w_max < bound:
        raise ValidationError(
            f"Sweep w_max={sweep.w_max:.6g} is below the tail bound {bound:.6g}"
        )

    w = sweep.grid()
    values = np.asarray(xi(w, gains, h, tau))
    mag, _ = _magnitude(w, gains, h, tau)
    peak_index = int(np.argmax(mag))
    peak = float(mag[peak_index])
    violating = np.flatnonzero(values <= 0)
    if violating.size == 0 and peak >= 1.0:
        # Xi > 0 and |H| < 1 disagree only through rounding at the boundary
        violating = np.array([peak_index])
    logger.debug(f"String sweep: {len(w)} points up to {sweep.w_max:.4g}, peak |H|={peak:.6g}")

    if violating.size == 0:
        return StabilityVerdict(stable=True, margin=1.0 - peak, criterion="string-exact")
    return StabilityVerdict(
        stable=False,
        margin=min(1.0 - peak, 0.0),
        witness=float(w[violating[0]]),
        criterion="string-exact",
    )
