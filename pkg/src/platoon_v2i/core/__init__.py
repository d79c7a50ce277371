"""
Core domain types, unit conversions and reference parameter sets.
"""

from platoon_v2i.core.types import (
    ControlGains,
    DisturbanceKind,
    DisturbanceProfile,
    DisturbanceSegment,
    LambdaEta,
    PlatoonConfig,
    RadioParams,
    StabilityVerdict,
    Trajectory,
    derive_lambda_eta,
)
from platoon_v2i.core.units import dbm_to_watts, thermal_noise_dbm, watts_to_dbm

__all__ = [
    "ControlGains",
    "LambdaEta",
    "PlatoonConfig",
    "DisturbanceKind",
    "DisturbanceSegment",
    "DisturbanceProfile",
    "Trajectory",
    "RadioParams",
    "StabilityVerdict",
    "derive_lambda_eta",
    "dbm_to_watts",
    "watts_to_dbm",
    "thermal_noise_dbm",
]
