# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""Tests for scenario loading and validation."""

from __future__ import annotations

import pytest

from platoon_v2i.config.loader import load_config, scenario_description
from platoon_v2i.core.presets import REFERENCE_DELAYS, REFERENCE_GAINS
from platoon_v2i.dynamics.simulator import Integrator
from platoon_v2i.exceptions import ConfigurationError, ScenarioNotFoundError


class TestLoadCorpus:
    """Loading corpus scenarios by id."""

    @pytest.mark.parametrize("scenario_id", ["fig3a", "fig3b", "fig3c", "fig4"])
    def test_gain_rows_load_exactly(self, scenario_id):
        definition = load_config(scenario_id)
        assert definition.gains == REFERENCE_GAINS[scenario_id]
        assert definition.platoon.delay == REFERENCE_DELAYS[scenario_id]

    def test_simulation_built(self):
        definition = load_config("fig3c")
        assert definition.simulation.integrator is Integrator.RK4
        assert definition.simulation.delay_steps == 60
        assert definition.id == "fig3c"

    def test_radio_takes_followers_from_platoon(self):
        definition = load_config("table1")
        assert definition.radio.m_followers == definition.platoon.m_followers == 9
        assert definition.radio.noise_power_dbm is None
        assert definition.simulation is None

    def test_not_found(self):
        with pytest.raises(ScenarioNotFoundError):
            load_config("no_such_scenario")


class TestDtOverride:
    """The --dt override goes through the same invariants."""

    def test_grid_multiple_accepted(self, scenario_file_factory, short_simulation_sections):
        path = scenario_file_factory(**short_simulation_sections)
        definition = load_config(path, dt=0.01)
        assert definition.simulation.delay_steps == 30
        assert definition.snapshot["simulation"]["dt"] == 0.01

    def test_off_grid_rejected(self, scenario_file_factory, short_simulation_sections):
        """tau=0.3 with dt=0.007 names the violated rule."""
        path = scenario_file_factory(**short_simulation_sections)
        with pytest.raises(ConfigurationError, match="delay not an integer multiple of dt"):
            load_config(path, dt=0.007)


class TestInvalidFiles:
    """Parse and validation failures name the file and the problem."""

    def test_json_syntax_error_has_position(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"schema_version": 1,\n  "id": }\n')
        with pytest.raises(ConfigurationError, match=r"broken\.json:2:\d+: invalid JSON"):
            load_config(path)

    def test_undecodable_bytes(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_bytes(b'{"schema_version": 1, "id": "\xff\xfe"}')
        with pytest.raises(ConfigurationError, match=r"bad\.json: not valid UTF-8 at byte 29"):
            load_config(path)

    def test_unknown_key(self, scenario_file_factory, short_simulation_sections):
        sections = dict(short_simulation_sections)
        sections["platoon"] = {"m_followers": 2, "delay": 0.3, "mfollowers": 3}
        path = scenario_file_factory(**sections)
        with pytest.raises(ConfigurationError, match="platoon.mfollowers"):
            load_config(path)

    def test_nothing_to_run(self, scenario_file_factory):
        path = scenario_file_factory(platoon={"delay": 0.3})
        with pytest.raises(ConfigurationError, match="selects nothing to run"):
            load_config(path)

    def test_simulation_needs_gains(self, scenario_file_factory, short_simulation_sections):
        sections = {k: v for k, v in short_simulation_sections.items() if k not in ("gains", "checks")}
        path = scenario_file_factory(**sections)
        with pytest.raises(ConfigurationError, match="simulation requires both platoon and gains"):
            load_config(path)

    def test_negative_gain(self, scenario_file_factory, short_simulation_sections):
        sections = dict(short_simulation_sections)
        sections["gains"] = {"k_v": -0.75, "k_vo": 0.75, "k_x": 0.249, "k_xo": 0.228}
        path = scenario_file_factory(**sections)
        with pytest.raises(ConfigurationError, match="gains.k_v"):
            load_config(path)

    def test_unknown_sweep_axis(self, scenario_file_factory, short_simulation_sections):
        path = scenario_file_factory(**short_simulation_sections, sweep={"axes": {"gamma": [1.0]}})
        with pytest.raises(ConfigurationError, match="unknown sweep axes"):
            load_config(path)

    def test_too_few_antennas(self, scenario_file_factory):
        radio = load_config("table1").snapshot["radio"] | {"n_antennas": 10}
        path = scenario_file_factory(platoon={"m_followers": 9, "delay": 0.3}, radio=radio)
        with pytest.raises(ConfigurationError, match="N > M \\+ 1"):
            load_config(path)

    def test_fit_needs_reference(self, scenario_file_factory):
        radio = load_config("table1").snapshot["radio"] | {"reported": []}
        path = scenario_file_factory(platoon={"m_followers": 9, "delay": 0.3}, radio=radio)
        with pytest.raises(ConfigurationError, match="fit_offset requires"):
            load_config(path)


class TestYamlScenario:
    """YAML scenario files load like JSON ones."""

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "region.yaml"
        path.write_text("schema_version: 1\nid: region_only\nregion:\n  delays: [0.2]\n  n_points: 10\n")
        definition = load_config(path)
        assert definition.region.delays == [0.2]
        assert definition.simulation is None

    def test_description_from_yaml(self, tmp_path):
        path = tmp_path / "region.yaml"
        path.write_text("schema_version: 1\nid: region_only\ndescription: D-curve only\nregion:\n  delays: [0.2]\n")
        assert scenario_description(path) == "D-curve only"

    def test_description_missing(self, tmp_path):
        path = tmp_path / "bare.json"
        path.write_text('{"schema_version": 1, "id": "bare"}')
        assert scenario_description(path) == ""
