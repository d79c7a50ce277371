# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Formatted run summaries for CLI display.

Usage:
    from platoon_v2i.validation.reporter import format_run_report

    manifest = run_scenario("fig3c")
    print(format_run_report(manifest))
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from platoon_v2i.scenarios.runner import RunManifest, VerdictSummary

logger = logging.getLogger(__name__)

REPORT_WIDTH = 60
MAX_FOLLOWERS_DISPLAYED = 10


def format_verdict_line(name: str, verdict: VerdictSummary) -> str:
    """One '[OK]' / '[!!]' line."""
    mark = "[OK]" if verdict.ok else "[!!]"
    parts = [f"  {mark} {name}: {verdict.label}"]
    if verdict.margin is not None:
        parts.append(f"margin={verdict.margin:.6g}")
    if verdict.witness is not None:
        parts.append(f"witness={verdict.witness:.6g}")
    if verdict.detail:
        parts.append(f"({verdict.detail})")
    return " ".join(parts)


def format_run_report(manifest: RunManifest) -> str:
    """
    Generate the run summary.

    Returns:
        Formatted report string for CLI output.
    """
    lines = []
    lines.append("=" * REPORT_WIDTH)
    lines.append(f"Scenario {manifest.scenario_id}")
    lines.append("=" * REPORT_WIDTH)

    if manifest.verdicts:
        lines.append("")
        lines.append("Verdicts:")
        for name, verdict in manifest.verdicts.items():
            lines.append(format_verdict_line(name, verdict))

    metrics = manifest.metrics
    if metrics:
        lines.append("")
        lines.append("Metrics:")
        if "lambda" in metrics:
            lines.append(f"  lambda={metrics['lambda']:.6g}, eta={metrics['eta']:.6g}")
        peaks = metrics.get("peak_spacing_errors")
        if peaks:
            shown = ", ".join(f"{p:.4g}" for p in peaks[:MAX_FOLLOWERS_DISPLAYED])
            more = f" ... and {len(peaks) - MAX_FOLLOWERS_DISPLAYED} more" if len(peaks) > MAX_FOLLOWERS_DISPLAYED else ""
            lines.append(f"  Peak |e_i| (m): {shown}{more}")
        if "settling_time" in metrics:
            settle = metrics["settling_time"]
            text = "never" if settle is None else f"{settle:.3f} s"
            lines.append(f"  Settling (tol {metrics['settling_tol']:g} m): {text}")
        if "sweep_points" in metrics:
            lines.append(
                f"  Sweep: {metrics['sweep_points']} points, {metrics['sweep_failed_points']} failed"
            )
        if "v_max" in metrics:
            lines.append("  v_max (m/s): " + ", ".join(f"{v:.2f}" for v in metrics["v_max"]))
        if "link_budget_offset_db" in metrics:
            lines.append(
                f"  Link-budget offset: {metrics['link_budget_offset_db']:.3f} dB "
                f"(max error {metrics['calibrated_max_abs_error']:.2f} m/s)"
            )

    if manifest.outputs:
        lines.append("")
        lines.append("Artifacts:")
        for name, path in manifest.outputs.items():
            lines.append(f"  {name}: {path}")

    lines.append("")
    lines.append(f"Duration: {manifest.duration_s:.2f} s, exit code {manifest.exit_code}")
    lines.append("=" * REPORT_WIDTH)
    return "\n".join(lines)
