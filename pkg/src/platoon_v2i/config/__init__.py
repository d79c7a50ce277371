"""Scenario file models, loading and data-directory discovery."""

from platoon_v2i.config.loader import ScenarioDefinition, load_config
from platoon_v2i.config.models import SCHEMA_VERSION, ScenarioFile
from platoon_v2i.config.paths import (
    default_out_dir,
    find_data_dir,
    find_scenario_dir,
    list_scenarios,
    resolve_scenario,
)

__all__ = [
    "SCHEMA_VERSION",
    "ScenarioDefinition",
    "ScenarioFile",
    "default_out_dir",
    "find_data_dir",
    "find_scenario_dir",
    "list_scenarios",
    "load_config",
    "resolve_scenario",
]
