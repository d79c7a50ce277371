# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""Tests for validation reporter module."""

from __future__ import annotations

from platoon_v2i.scenarios.runner import RunManifest, VerdictSummary
from platoon_v2i.validation.reporter import REPORT_WIDTH, format_run_report, format_verdict_line


def _manifest(**kwargs) -> RunManifest:
    return RunManifest(scenario_id="fig3c", source="scenarios/fig3c.json", config={}, **kwargs)


class TestFormatVerdictLine:
    """Test format_verdict_line() function."""

    def test_ok_line(self):
        line = format_verdict_line("plant", VerdictSummary(ok=True, label="stable", margin=3.779, witness=4.256))
        assert line.startswith("  [OK] plant: stable")
        assert "margin=3.779" in line
        assert "witness=4.256" in line

    def test_negative_line(self):
        line = format_verdict_line("radio", VerdictSummary(ok=False, label="infeasible", detail="too far"))
        assert line.startswith("  [!!] radio: infeasible")
        assert "(too far)" in line
        assert "margin" not in line


class TestFormatRunReport:
    """Test format_run_report() function."""

    def test_header_and_footer(self):
        report = format_run_report(_manifest())
        lines = report.splitlines()
        assert lines[0] == "=" * REPORT_WIDTH
        assert lines[1] == "Scenario fig3c"
        assert lines[-1] == "=" * REPORT_WIDTH
        assert "exit code 0" in report

    def test_negative_verdict_sets_exit_code(self):
        manifest = _manifest(verdicts={"string_exact": VerdictSummary(ok=False, label="unstable", witness=0.8)})
        report = format_run_report(manifest)
        assert "[!!] string_exact: unstable" in report
        assert "exit code 2" in report

    def test_never_settles(self):
        manifest = _manifest(metrics={"settling_time": None, "settling_tol": 1e-3})
        assert "Settling (tol 0.001 m): never" in format_run_report(manifest)

    def test_truncates_long_peak_list(self):
        manifest = _manifest(metrics={"peak_spacing_errors": [0.1] * 12})
        assert "... and 2 more" in format_run_report(manifest)

    def test_calibration_line(self):
        manifest = _manifest(
            metrics={"v_max": [24.1, 35.2], "link_budget_offset_db": 4.0, "calibrated_max_abs_error": 0.6}
        )
        report = format_run_report(manifest)
        assert "v_max (m/s): 24.10, 35.20" in report
        assert "Link-budget offset: 4.000 dB (max error 0.60 m/s)" in report

    def test_lists_artifacts(self):
        manifest = _manifest(outputs={"trajectory": "out/fig3c/trajectory.csv"})
        assert "  trajectory: out/fig3c/trajectory.csv" in format_run_report(manifest)
