"""
Exception hierarchy for platoon-v2i-delay.

All exceptions propagate up the stack - no silent catches or fallbacks.
Outcomes that are part of the physics (an unstable verdict, an infeasible
coverage geometry, a diverging trajectory) are returned as values instead.

ADR: 2026-10-01-delay-aware-platoon-toolkit
"""


class PlatoonError(Exception):
    """Base exception for all platoon-v2i-delay errors."""


class ConfigurationError(PlatoonError):
    """Raised when a configuration file is invalid or missing."""


class ScenarioNotFoundError(ConfigurationError):
    """Raised when a corpus scenario id or config path cannot be resolved."""


class ValidationError(PlatoonError, ValueError):
    """Raised when a domain object violates one of its invariants."""


class SimulationError(PlatoonError):
    """Raised when the integrator hits an internal inconsistency."""


class HistoryUnderflowError(SimulationError):
    """Raised when a delayed lookup falls outside the stored history."""


class NumericalError(PlatoonError):
    """Raised when a numerical procedure fails to converge."""


class DomainError(NumericalError, ValueError):
    """Raised when a function is evaluated outside its admissible domain."""


class NoFeasibleHeadwayError(PlatoonError):
    """Raised when no positive time headway satisfies the string bound."""


class RadioPlanningError(PlatoonError):
    """Base exception for link-budget and handover planning failures."""


class InsufficientAntennasError(RadioPlanningError, ValidationError):
    """Raised when N <= M + 1 so the zero-forcing rate is undefined."""


class CoverageInfeasibleError(RadioPlanningError):
    """Raised when the RSU coverage radius does not reach the lane."""


class PlatoonDoesNotFitError(RadioPlanningError):
    """Raised when the platoon is longer than the usable coverage chord."""


class NoFeasibleVelocityError(RadioPlanningError):
    """Raised when the handover constraint admits no positive velocity."""


class SchemaError(PlatoonError):
    """Raised when an artifact schema file is missing or invalid."""


class PoleProximityWarning(UserWarning):
    """Emitted when |Theta(jw)|^2 is close to zero during a transfer evaluation."""
