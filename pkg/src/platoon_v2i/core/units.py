"""
Unit conversions used at configuration boundaries.

All internal physics runs in SI units (m, s, W, Hz). dBm only appears in
config files and report columns.
"""

from __future__ import annotations

import math

from platoon_v2i.exceptions import ValidationError

# Thermal noise floor at 290 K, dBm per Hz
THERMAL_NOISE_DBM_PER_HZ = -174.0


def dbm_to_watts(p_dbm: float) -> float:
    """Convert a power level in dBm to watts: 10^((p - 30) / 10)."""
    if not math.isfinite(p_dbm):
        raise ValidationError(f"Power must be finite, got {p_dbm}")
    return 10.0 ** ((p_dbm - 30.0) / 10.0)


def watts_to_dbm(p_watts: float) -> float:
    """Convert a power in watts to dBm."""
    if not p_watts > 0:
        raise ValidationError(f"Power must be positive to express in dBm, got {p_watts}")
    return 10.0 * math.log10(p_watts) + 30.0


def thermal_noise_dbm(bandwidth_hz: float) -> float:
    """Thermal noise power over a bandwidth: -174 + 10*log10(B) dBm."""
    if not bandwidth_hz > 0:
        raise ValidationError(f"Bandwidth must be positive, got {bandwidth_hz}")
    return THERMAL_NOISE_DBM_PER_HZ + 10.0 * math.log10(bandwidth_hz)
