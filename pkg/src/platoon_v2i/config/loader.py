# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Scenario loading.

A scenario is named either by a file path or by a corpus id resolved under
the scenarios directory (see ``platoon_v2i.config.paths``). Parse errors and
violated invariants surface as ConfigurationError naming the file and field.

Usage:
    from platoon_v2i.config.loader import load_config

    definition = load_config("fig3c")
    traj = simulate(definition.simulation)
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import pydantic
import yaml

from platoon_v2i.config.models import ChecksModel, RadioModel, RegionModel, ScenarioFile
from platoon_v2i.config.paths import resolve_scenario
from platoon_v2i.core.types import (
    ControlGains,
    DisturbanceProfile,
    DisturbanceSegment,
    PlatoonConfig,
    RadioParams,
)
from platoon_v2i.dynamics.simulator import SimulationScenario
from platoon_v2i.exceptions import ConfigurationError, ValidationError
from platoon_v2i.scenarios.sweep import SweepSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScenarioDefinition:
    """A validated scenario: domain objects plus the snapshot they came from.

    Attributes:
        id: Scenario id
        description: Free text
        source: File the scenario was read from
        snapshot: Normalised document (defaults filled, overrides applied)
        platoon: Platoon configuration, if the file has one
        gains: Control gains, if the file has them
        simulation: Ready-to-run simulation scenario
        checks: Verdicts to compute
        region: Plant-region export request
        radio: Radio parameters for the planner
        radio_request: Planner grid and calibration request
        sweep: Parameter sweep around the base simulation
    """

    id: str
    description: str
    source: Path
    snapshot: dict[str, Any]
    platoon: PlatoonConfig | None = None
    gains: ControlGains | None = None
    simulation: SimulationScenario | None = None
    checks: ChecksModel | None = None
    region: RegionModel | None = None
    radio: RadioParams | None = None
    radio_request: RadioModel | None = None
    sweep: SweepSpec | None = None


def _read_document(path: Path) -> dict[str, Any]:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ConfigurationError(f"{path}: not valid UTF-8 at byte {e.start}") from e
    except OSError as e:
        raise ConfigurationError(f"{path}: cannot read: {e.strerror or e}") from e
    try:
        if path.suffix == ".json":
            raw = json.loads(text)
        else:
            raw = yaml.safe_load(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"{path}:{e.lineno}:{e.colno}: invalid JSON: {e.msg}") from e
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f"{mark.line + 1}:{mark.column + 1}" if mark is not None else "?"
        raise ConfigurationError(f"{path}:{where}: invalid YAML: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigurationError(f"{path}: top level must be a mapping, got {type(raw).__name__}")
    return raw


def scenario_description(path: Path) -> str:
    """Free-text description of a scenario file, JSON or YAML, without validating it."""
    description = _read_document(path).get("description", "")
    return description if isinstance(description, str) else ""


def _format_pydantic(path: Path, error: pydantic.ValidationError) -> str:
    lines = [f"{path}: {error.error_count()} invalid field(s)"]
    for item in error.errors():
        loc = ".".join(str(part) for part in item["loc"]) or "<root>"
        lines.append(f"  {loc}: {item['msg']}")
    return "\n".join(lines)


def _radio_params(model: RadioModel, platoon: PlatoonConfig) -> RadioParams:
    return RadioParams(
        n_antennas=model.n_antennas,
        m_followers=platoon.m_followers,
        tx_power_leader_dbm=model.tx_power_leader_dbm,
        bandwidth_hz=model.bandwidth_hz,
        carrier_freq_hz=model.carrier_freq_hz,
        path_loss_exp=model.path_loss_exp,
        perp_distance_m=model.perp_distance_m,
        elev_diff_m=model.elev_diff_m,
        rate_threshold_bps=model.rate_threshold_bps,
        handover_freq_hz=model.handover_freq_hz,
        noise_power_dbm=None if model.noise_power_dbm == "auto" else model.noise_power_dbm,
        noise_figure_db=model.noise_figure_db,
    )


def _build(doc: ScenarioFile, path: Path, snapshot: dict[str, Any]) -> ScenarioDefinition:
    platoon = PlatoonConfig(**doc.platoon.model_dump()) if doc.platoon else None
    gains = ControlGains(**doc.gains.model_dump()) if doc.gains else None

    disturbance = DisturbanceProfile(
        kind=doc.disturbance.kind,
        window=doc.disturbance.window,
        segments=tuple(DisturbanceSegment(**s.model_dump()) for s in doc.disturbance.segments),
        recovery_gain=doc.disturbance.recovery_gain,
    )

    simulation = None
    if doc.simulation is not None and platoon is not None and gains is not None:
        simulation = SimulationScenario(
            platoon=platoon,
            gains=gains,
            disturbance=disturbance,
            t_end=doc.simulation.t_end,
            dt=doc.simulation.dt,
            integrator=doc.simulation.integrator,
        )

    checks = doc.checks or ChecksModel()
    radio = _radio_params(doc.radio, platoon) if doc.radio and platoon else None
    sweep = (
        SweepSpec(
            base=simulation,
            axes={k: tuple(v) for k, v in doc.sweep.axes.items()},
            settling_tol=checks.settling_tol,
            sweep_step=checks.sweep_step,
        )
        if doc.sweep is not None and simulation is not None
        else None
    )

    return ScenarioDefinition(
        id=doc.id,
        description=doc.description,
        source=path,
        snapshot=snapshot,
        platoon=platoon,
        gains=gains,
        simulation=simulation,
        checks=doc.checks,
        region=doc.region,
        radio=radio,
        radio_request=doc.radio,
        sweep=sweep,
    )


def load_config(
    name_or_path: str | Path,
    dt: float | None = None,
) -> ScenarioDefinition:
    """
    Load and validate a scenario file.

    Args:
        name_or_path: File path or corpus id (e.g. "fig3c")
        dt: Override of simulation.dt (CLI --dt)

    Returns:
        ScenarioDefinition with domain objects built and defaults applied

    Raises:
        ScenarioNotFoundError: If the file cannot be resolved
        ConfigurationError: On parse errors or violated invariants; the
            message names the file and the offending field or rule
    """
    path = resolve_scenario(name_or_path)
    raw = _read_document(path)

    if dt is not None and isinstance(raw.get("simulation"), dict):
        raw["simulation"]["dt"] = dt

    try:
        doc = ScenarioFile.model_validate(raw)
    except pydantic.ValidationError as e:
        raise ConfigurationError(_format_pydantic(path, e)) from e

    snapshot = doc.model_dump(mode="json")
    try:
        definition = _build(doc, path, snapshot)
    except ValidationError as e:
        raise ConfigurationError(f"{path}: {e}") from e

    logger.debug(f"Loaded scenario '{doc.id}' from {path}")
    return definition
