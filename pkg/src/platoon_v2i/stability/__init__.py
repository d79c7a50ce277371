"""Plant- and string-stability analysis in the (lambda, eta) plane."""

from platoon_v2i.stability.plant import (
    DCurvePoint,
    corner_eta,
    crossing_direction,
    dcurve_point,
    plant_region_boundary,
    plant_stability_check,
    region_boundary_frame,
    solve_dcurve_frequency,
)
from platoon_v2i.stability.roots import (
    DEFAULT_SEARCH,
    RootSearchConfig,
    SpectralAbscissa,
    characteristic,
    characteristic_derivative,
    spectral_abscissa,
)
from platoon_v2i.stability.string import (
    FrequencySweepConfig,
    frequency_response,
    h_infinity_norm,
    max_headway,
    string_stability_exact,
    string_stability_sufficient,
    tail_bound,
    transfer_magnitude,
    xi,
)

__all__ = [
    "DCurvePoint",
    "DEFAULT_SEARCH",
    "FrequencySweepConfig",
    "RootSearchConfig",
    "SpectralAbscissa",
    "characteristic",
    "characteristic_derivative",
    "corner_eta",
    "crossing_direction",
    "dcurve_point",
    "frequency_response",
    "h_infinity_norm",
    "max_headway",
    "plant_region_boundary",
    "plant_stability_check",
    "region_boundary_frame",
    "solve_dcurve_frequency",
    "spectral_abscissa",
    "string_stability_exact",
    "string_stability_sufficient",
    "tail_bound",
    "transfer_magnitude",
    "xi",
]
