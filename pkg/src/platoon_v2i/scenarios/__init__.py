"""Scenario corpus orchestration: single runs, sweeps and artifacts."""
