# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Scenario file models.

A scenario file is a JSON (corpus) or YAML document with
``schema_version: 1``. Sections are optional and select what a run does:
``simulation`` integrates the platoon, ``checks`` runs the stability tests,
``region`` exports plant-region boundaries, ``radio`` runs the handover
planner and ``sweep`` expands a parameter grid around the base simulation.

Unknown keys are rejected so typos fail loudly.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from platoon_v2i.core.presets import REFERENCE_HEADWAY, REFERENCE_STANDSTILL, REFERENCE_VELOCITY
from platoon_v2i.core.types import DisturbanceKind
from platoon_v2i.dynamics.simulator import DEFAULT_DT, Integrator

SCHEMA_VERSION = 1

SWEEP_AXES = ("k_x", "k_v", "k_vo", "k_xo", "delay", "headway", "m_followers")


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class PlatoonModel(_Strict):
    """Platoon geometry; defaults are the reference simulation platoon."""

    m_followers: int = Field(default=4, ge=1, description="Followers M")
    headway: float = Field(default=REFERENCE_HEADWAY, gt=0, description="Time headway h (s)")
    standstill: float = Field(default=REFERENCE_STANDSTILL, ge=0, description="Standstill distance l (m)")
    target_velocity: float = Field(default=REFERENCE_VELOCITY, gt=0, description="v_o (m/s)")
    delay: float = Field(..., gt=0, description="Total delay tau (s)")


class GainsModel(_Strict):
    """Control gains in the (K_v, K_vo, K_x, K_xo) order of the gain tables."""

    k_v: float = Field(..., gt=0)
    k_vo: float = Field(..., gt=0)
    k_x: float = Field(..., gt=0)
    k_xo: float = Field(..., gt=0)


class SegmentModel(_Strict):
    start: float
    end: float
    acceleration: float


class DisturbanceModel(_Strict):
    kind: DisturbanceKind = DisturbanceKind.NONE
    window: tuple[float, float] = (10.0, 30.0)
    segments: list[SegmentModel] = Field(default_factory=list)
    recovery_gain: float = Field(default=1.0, ge=0)


class SimulationModel(_Strict):
    t_end: float = Field(default=100.0, gt=0)
    dt: float = Field(default=DEFAULT_DT, gt=0)
    integrator: Integrator = Integrator.RK4


class ChecksModel(_Strict):
    """Which verdicts a run computes and reports."""

    plant: bool = True
    string_sufficient: bool = True
    string_exact: bool = True
    settling_tol: float = Field(default=1e-3, gt=0)
    sweep_step: float = Field(default=1e-3, gt=0, description="Frequency step of the exact sweep")


class RegionModel(_Strict):
    delays: list[float] = Field(..., min_length=1)
    n_points: int = Field(default=200, ge=2)

    @field_validator("delays")
    @classmethod
    def delays_positive(cls, v: list[float]) -> list[float]:
        if any(d <= 0 for d in v):
            raise ValueError(f"delays must be positive, got {v}")
        return v


class ReportedVelocity(_Strict):
    carrier_freq_hz: float = Field(..., gt=0)
    handover_freq_hz: float = Field(..., gt=0)
    v_max: float = Field(..., gt=0)


class RadioModel(_Strict):
    """Link-budget inputs; M is taken from the platoon section."""

    n_antennas: int = Field(..., ge=2)
    tx_power_leader_dbm: float
    bandwidth_hz: float = Field(..., gt=0)
    carrier_freq_hz: float = Field(..., gt=0)
    path_loss_exp: float = Field(..., gt=0)
    perp_distance_m: float = Field(..., ge=0)
    elev_diff_m: float = Field(..., ge=0)
    rate_threshold_bps: float = Field(..., gt=0)
    handover_freq_hz: float = Field(..., gt=0)
    noise_power_dbm: float | Literal["auto"] = "auto"
    noise_figure_db: float = 0.0
    carrier_freqs: list[float] = Field(default_factory=list, description="Grid; empty uses carrier_freq_hz")
    handover_freqs: list[float] = Field(default_factory=list, description="Grid; empty uses handover_freq_hz")
    reported: list[ReportedVelocity] = Field(default_factory=list)
    fit_offset: bool = False

    @model_validator(mode="after")
    def fit_needs_reference(self) -> RadioModel:
        if self.fit_offset and not self.reported:
            raise ValueError("fit_offset requires at least one reported velocity")
        return self


class SweepModel(_Strict):
    """Parameter grid; the Cartesian product runs in axis order."""

    axes: dict[str, list[float]] = Field(default_factory=dict)

    @field_validator("axes")
    @classmethod
    def known_axes(cls, v: dict[str, list[float]]) -> dict[str, list[float]]:
        unknown = sorted(set(v) - set(SWEEP_AXES))
        if unknown:
            raise ValueError(f"unknown sweep axes {unknown}; allowed: {list(SWEEP_AXES)}")
        return v


class ScenarioFile(_Strict):
    """Top-level scenario document."""

    schema_version: Literal[1] = Field(..., description="File format version")
    id: str = Field(..., min_length=1)
    description: str = ""
    platoon: PlatoonModel | None = None
    gains: GainsModel | None = None
    disturbance: DisturbanceModel = Field(default_factory=DisturbanceModel)
    simulation: SimulationModel | None = None
    checks: ChecksModel | None = None
    region: RegionModel | None = None
    radio: RadioModel | None = None
    sweep: SweepModel | None = None

    @model_validator(mode="after")
    def sections_have_inputs(self) -> ScenarioFile:
        """Each section must find the inputs it needs."""
        if self.simulation is not None and (self.platoon is None or self.gains is None):
            raise ValueError("simulation requires both platoon and gains")
        if self.checks is not None and (self.platoon is None or self.gains is None):
            raise ValueError("checks require both platoon and gains")
        if self.radio is not None and self.platoon is None:
            raise ValueError("radio requires platoon (M, h, l)")
        if self.sweep is not None and self.simulation is None:
            raise ValueError("sweep requires a base simulation")
        if not any((self.simulation, self.checks, self.region, self.radio)):
            raise ValueError("scenario selects nothing to run")
        return self
