"""
Shared test fixtures and factories.

Factory fixtures build valid domain objects with overridable fields so each
test only states what it varies.

ADR: 2026-10-01-delay-aware-platoon-toolkit
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from platoon_v2i.core.presets import (
    NO_DISTURBANCE,
    REFERENCE_HEADWAY,
    REFERENCE_STANDSTILL,
    REFERENCE_VELOCITY,
    HANDOVER_RADIO,
    REFERENCE_GAINS,
)
from platoon_v2i.core.types import ControlGains, PlatoonConfig, RadioParams, Trajectory
from platoon_v2i.dynamics.simulator import SimulationScenario


@pytest.fixture
def rng():
    """Seeded generator for property tests."""
    return np.random.default_rng(20261001)


@pytest.fixture
def platoon_factory():
    """Factory for platoon configurations (reference platoon by default)."""

    def _create(**overrides) -> PlatoonConfig:
        base = {
            "m_followers": 4,
            "headway": REFERENCE_HEADWAY,
            "standstill": REFERENCE_STANDSTILL,
            "target_velocity": REFERENCE_VELOCITY,
            "delay": 0.3,
        }
        base.update(overrides)
        return PlatoonConfig(**base)

    return _create


@pytest.fixture
def gains_factory():
    """Factory for control gains; defaults to the tau=0.3 s string-stable row."""

    def _create(**overrides) -> ControlGains:
        g = REFERENCE_GAINS["fig3c"]
        base = {"k_x": g.k_x, "k_v": g.k_v, "k_vo": g.k_vo, "k_xo": g.k_xo}
        base.update(overrides)
        return ControlGains(**base)

    return _create


@pytest.fixture
def radio_factory():
    """Factory for radio parameters starting from the handover preset."""

    def _create(**overrides) -> RadioParams:
        return HANDOVER_RADIO.with_updates(**overrides)

    return _create


@pytest.fixture
def scenario_factory(platoon_factory, gains_factory):
    """Factory for simulation scenarios (no disturbance, 100 s at dt=0.005)."""

    def _create(platoon=None, gains=None, **overrides) -> SimulationScenario:
        base = {
            "platoon": platoon or platoon_factory(),
            "gains": gains or gains_factory(),
            "disturbance": NO_DISTURBANCE,
            "t_end": 100.0,
            "dt": 0.005,
        }
        base.update(overrides)
        return SimulationScenario(**base)

    return _create


@pytest.fixture
def trajectory_factory():
    """Factory for hand-built trajectories from a spacing-error matrix."""

    def _create(errors, dt: float = 0.1, diverged: bool = False) -> Trajectory:
        e = np.asarray(errors, dtype=float)
        n, m = e.shape
        return Trajectory(
            dt=dt,
            times=np.arange(n) * dt,
            x=np.zeros((n, m + 1)),
            v=np.zeros((n, m + 1)),
            u=np.zeros((n, m)),
            e=e,
            headway=REFERENCE_HEADWAY,
            target_velocity=REFERENCE_VELOCITY,
            standstill=REFERENCE_STANDSTILL,
            diverged=diverged,
        )

    return _create


@pytest.fixture
def scenario_file_factory(tmp_path):
    """Factory writing a scenario document to a temporary JSON file."""

    def _create(name: str = "custom", **sections) -> Path:
        doc = {"schema_version": 1, "id": name, "description": "test scenario"}
        doc.update(sections)
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc, indent=2))
        return path

    return _create


@pytest.fixture
def short_simulation_sections():
    """Sections of a fast simulated scenario (sinusoid on [10, 30], 40 s at dt=0.01)."""
    return {
        "platoon": {"m_followers": 2, "delay": 0.3},
        "gains": {"k_v": 0.75, "k_vo": 0.75, "k_x": 0.249, "k_xo": 0.228},
        "disturbance": {"kind": "sinusoid", "window": [10.0, 30.0]},
        "simulation": {"t_end": 40.0, "dt": 0.01},
        "checks": {"sweep_step": 0.01},
    }
