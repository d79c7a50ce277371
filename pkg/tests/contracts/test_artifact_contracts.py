"""
Contract tests between artifact schemas, writers and the scenario corpus.

These tests validate architectural invariants (not mocked data).

ADR: 2026-10-01-delay-aware-platoon-toolkit
"""

from __future__ import annotations

import pytest

from platoon_v2i.config.loader import load_config
from platoon_v2i.config.paths import list_scenarios
from platoon_v2i.core.presets import REFERENCE_GAINS
from platoon_v2i.dynamics.export import trajectory_columns
from platoon_v2i.radio.planner import PLANNER_COLUMNS
from platoon_v2i.schema.loader import get_schema_path, list_schemas, load_schema
from platoon_v2i.stability.plant import region_boundary_frame
from platoon_v2i.stability.string import frequency_response

pytestmark = pytest.mark.contracts

SCHEMAS = ["frequency_response", "planner_report", "region_boundary", "sweep_report"]

CORPUS_IDS = {
    "fig2", "fig3a", "fig3b", "fig3c", "fig4", "fig5a", "fig5b", "fig6a", "fig6b",
    "fig7a", "fig7b", "fig8a", "fig8b", "fig7_size_sweep", "fig8_delay_sweep",
    "table1", "table1_3p5ghz", "table1_5p9ghz",
}


class TestSchemaContracts:
    """Validate the artifact schema files."""

    def test_all_schemas_present(self):
        assert list_schemas() == SCHEMAS

    @pytest.mark.parametrize("name", SCHEMAS)
    def test_schema_file_exists(self, name):
        assert get_schema_path(name).exists()

    @pytest.mark.parametrize("name", SCHEMAS)
    def test_required_fields_in_columns(self, name):
        schema = load_schema(name)
        for required in schema.required_columns:
            assert required in schema.column_names, f"{name}: required {required} missing from columns"

    @pytest.mark.parametrize("name", SCHEMAS)
    def test_float_format_is_lossless(self, name):
        assert load_schema(name).float_format == "%.17g"


class TestWriterContracts:
    """Writers produce exactly the schema columns."""

    def test_planner_columns(self):
        assert load_schema("planner_report").column_names == PLANNER_COLUMNS

    def test_region_columns(self):
        assert list(region_boundary_frame(0.3, 5).columns) == load_schema("region_boundary").column_names

    def test_frequency_response_columns(self):
        frame = frequency_response(REFERENCE_GAINS["fig3c"], 0.2, 0.3)
        assert list(frame.columns) == load_schema("frequency_response").column_names

    def test_sweep_peak_columns(self):
        columns = load_schema("sweep_report").expand_columns(3)
        assert columns[-3:] == ["peak_e_1", "peak_e_2", "peak_e_3"]

    def test_trajectory_columns(self):
        columns = trajectory_columns(2)
        assert columns[0] == "t"
        assert {"x_0", "v_0", "x_2", "u_2", "e_2"} <= set(columns)


class TestCorpusContracts:
    """The shipped scenario corpus is complete and loads."""

    def test_corpus_complete(self):
        assert {p.stem for p in list_scenarios()} == CORPUS_IDS

    @pytest.mark.parametrize("scenario_id", sorted(CORPUS_IDS))
    def test_every_scenario_loads(self, scenario_id):
        definition = load_config(scenario_id)
        assert definition.id == scenario_id
        assert definition.description
