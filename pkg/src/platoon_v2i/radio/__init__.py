"""V2I link budget and handover planning."""

from platoon_v2i.radio.link_budget import (
    CoverageResult,
    achievable_rate,
    coverage_radius,
    longitudinal_range,
)
from platoon_v2i.radio.planner import (
    PLANNER_COLUMNS,
    LinkBudgetFit,
    PlanRow,
    fit_link_budget_offset,
    max_isld,
    max_platoon_velocity,
    min_antennas,
    plan_row,
    plan_table,
    platoon_length,
    stay_time,
)

__all__ = [
    "PLANNER_COLUMNS",
    "CoverageResult",
    "LinkBudgetFit",
    "PlanRow",
    "achievable_rate",
    "coverage_radius",
    "fit_link_budget_offset",
    "longitudinal_range",
    "max_isld",
    "max_platoon_velocity",
    "min_antennas",
    "plan_row",
    "plan_table",
    "platoon_length",
    "stay_time",
]
