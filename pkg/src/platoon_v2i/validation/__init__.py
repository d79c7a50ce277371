"""Run summaries for the command line."""

from platoon_v2i.validation.reporter import REPORT_WIDTH, format_run_report, format_verdict_line

__all__ = ["REPORT_WIDTH", "format_run_report", "format_verdict_line"]
