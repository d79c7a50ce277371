"""
platoon-v2i-delay: delay-aware V2I platoon control.

Simulates a leader-follower platoon under a centralised RSU control law with
communication and edge-processing delay, decides plant and string stability
of the control gains, and plans RSU coverage and handover for the platoon.

Quick Start:
    import platoon_v2i as pv

    gains = pv.ControlGains(k_x=0.249, k_v=0.75, k_vo=0.75, k_xo=0.228)
    verdict = pv.plant_stability_check(gains.lambda_eta(0.2), tau=0.3)

    manifest = pv.run_scenario("fig3c")

ADR: 2026-10-01-delay-aware-platoon-toolkit
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
from platoon_v2i.dynamics.simulator import SimulationScenario, simulate
from platoon_v2i.exceptions import (
    ConfigurationError,
    DomainError,
    NumericalError,
    PlatoonError,
    RadioPlanningError,
    SchemaError,
    SimulationError,
    ValidationError,
)
from platoon_v2i.radio.link_budget import longitudinal_range
from platoon_v2i.radio.planner import max_platoon_velocity
from platoon_v2i.scenarios.runner import run_scenario
from platoon_v2i.stability.plant import plant_stability_check
from platoon_v2i.stability.string import string_stability_exact, string_stability_sufficient

# ADR: 2026-10-01-delay-aware-platoon-toolkit - dynamic version with fallback
try:
    from importlib.metadata import version as _get_version

    __version__ = _get_version("platoon-v2i-delay")
except Exception:
    __version__ = "0.2.0"  # Fallback for editable installs

__all__ = [
    "__version__",
    # Domain types
    "ControlGains",
    "DisturbanceKind",
    "DisturbanceProfile",
    "DisturbanceSegment",
    "LambdaEta",
    "PlatoonConfig",
    "RadioParams",
    "StabilityVerdict",
    "Trajectory",
    "derive_lambda_eta",
    # Operations
    "SimulationScenario",
    "simulate",
    "plant_stability_check",
    "string_stability_sufficient",
    "string_stability_exact",
    "longitudinal_range",
    "max_platoon_velocity",
    "run_scenario",
    # Exceptions
    "PlatoonError",
    "ConfigurationError",
    "ValidationError",
    "SimulationError",
    "NumericalError",
    "DomainError",
    "RadioPlanningError",
    "SchemaError",
]
