# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Zero-forcing uplink budget of one RSU.

    R(d) = B log2(1 + P (N - M - 1) beta d^-alpha / sigma^2)

and its inverse, the coverage radius d_th at which R(d_th) = R_th. The
longitudinal half-range along the lane is sqrt(d_th^2 - r_o^2 - h_o^2).

Usage:
    from platoon_v2i.core.presets import HANDOVER_RADIO
    from platoon_v2i.radio.link_budget import longitudinal_range

    cov = longitudinal_range(HANDOVER_RADIO)
    print(cov.d_th, cov.ell_th, cov.feasible)  # ~620.7 ~620.6 True
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from platoon_v2i.core.types import RadioParams
from platoon_v2i.exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoverageResult:
    """Coverage radius d_th (m), longitudinal half-range ell_th (m), feasibility."""

    d_th: float
    ell_th: float
    feasible: bool

    def __post_init__(self) -> None:
        if self.feasible and not self.ell_th > 0:
            raise ValidationError(f"Feasible coverage needs ell_th > 0, got {self.ell_th}")


def _snr_at_unit_distance(rp: RadioParams) -> float:
    return rp.tx_power_leader_w * rp.zf_array_gain * rp.beta / rp.noise_power_w


def achievable_rate(rp: RadioParams, d: float) -> float:
    """
    Uplink rate (bps) of a vehicle at distance d (m) from the RSU.

    N > M + 1 is enforced when RadioParams is built.
    """
    if not d > 0:
        raise ValidationError(f"Distance must be positive, got {d}")
    snr = _snr_at_unit_distance(rp) * math.exp(-rp.path_loss_exp * math.log(d))
    return rp.bandwidth_hz * math.log2(1.0 + snr)


def coverage_radius(rp: RadioParams) -> float:
    """
    Distance d_th (m) at which the rate drops to R_th.

    The 1/alpha root is taken in log space so non-integer alpha stays accurate.
    """
    required_snr = math.expm1(rp.rate_threshold_bps / rp.bandwidth_hz * math.log(2.0))
    log_d = (math.log(_snr_at_unit_distance(rp)) - math.log(required_snr)) / rp.path_loss_exp
    return math.exp(log_d)


def longitudinal_range(rp: RadioParams) -> CoverageResult:
    """Coverage radius and the lane half-chord it covers; infeasible is a value."""
    d_th = coverage_radius(rp)
    offset_sq = rp.perp_distance_m**2 + rp.elev_diff_m**2
    chord_sq = d_th * d_th - offset_sq
    if chord_sq <= 0:
        logger.debug(f"Coverage radius {d_th:.4g} m does not reach the lane (offset {math.sqrt(offset_sq):.4g} m)")
        return CoverageResult(d_th=d_th, ell_th=0.0, feasible=False)
    return CoverageResult(d_th=d_th, ell_th=math.sqrt(chord_sq), feasible=True)
