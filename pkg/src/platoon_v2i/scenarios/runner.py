# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Scenario orchestration.

``run_scenario`` loads a scenario, runs every section it configures and
writes the artifacts plus ``manifest.json`` to ``<out>/<scenario id>/``:

    region_tau<tau>.csv     plant-region boundary per delay
    frequency_response.csv  |H(jw)| over the string sweep
    trajectory.csv          simulated platoon
    sweep.csv, rows/        parameter sweep
    planner.csv             handover planner (and planner_calibrated.csv)

Usage:
    from platoon_v2i.scenarios.runner import run_scenario

    manifest = run_scenario("fig4", out_dir=Path("out"))
    print(manifest.exit_code)  # 2: string-unstable by design
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from platoon_v2i.config.loader import ScenarioDefinition, load_config
from platoon_v2i.config.models import ChecksModel, RadioModel, RegionModel
from platoon_v2i.config.paths import default_out_dir
from platoon_v2i.core.types import ControlGains, PlatoonConfig, RadioParams, StabilityVerdict
from platoon_v2i.dynamics.export import write_trajectory_csv
from platoon_v2i.dynamics.metrics import peak_spacing_errors, settling_time
from platoon_v2i.dynamics.simulator import SimulationScenario, simulate
from platoon_v2i.exceptions import RadioPlanningError
from platoon_v2i.radio.planner import fit_link_budget_offset, plan_table
from platoon_v2i.scenarios.artifacts import write_artifact
from platoon_v2i.scenarios.sweep import SweepSpec, run_sweep
from platoon_v2i.stability.plant import plant_stability_check, region_boundary_frame
from platoon_v2i.stability.string import (
    FrequencySweepConfig,
    frequency_response,
    string_stability_exact,
    string_stability_sufficient,
)

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE_VERDICT = 2


@dataclass(frozen=True)
class VerdictSummary:
    """JSON-friendly verdict: ok is stable/feasible."""

    ok: bool
    label: str
    margin: float | None = None
    witness: float | None = None
    detail: str = ""

    @classmethod
    def from_verdict(cls, verdict: StabilityVerdict) -> VerdictSummary:
        return cls(ok=verdict.stable, label=verdict.label, margin=verdict.margin, witness=verdict.witness)


@dataclass
class RunManifest:
    """Everything needed to reproduce and audit one run.

    Attributes:
        scenario_id: Scenario id
        source: Scenario file path
        config: Normalised scenario snapshot (overrides applied)
        integrator: Integrator settings of the simulation, if any
        outputs: Artifact name -> path
        duration_s: Wall-clock duration
        verdicts: Verdict name -> summary
        metrics: Scalar results (peak errors, settling time, fitted offset)
    """

    scenario_id: str
    source: str
    config: dict[str, Any]
    integrator: dict[str, Any] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)
    duration_s: float = 0.0
    verdicts: dict[str, VerdictSummary] = field(default_factory=dict)
    metrics: dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        """0 when every verdict is ok, 2 otherwise."""
        return EXIT_OK if all(v.ok for v in self.verdicts.values()) else EXIT_NEGATIVE_VERDICT

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def write(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")
        return path


def _run_region(region: RegionModel, out: Path, manifest: RunManifest) -> None:
    for tau in region.delays:
        frame = region_boundary_frame(tau, region.n_points)
        path = write_artifact(frame, out / f"region_tau{tau:g}.csv", "region_boundary")
        manifest.outputs[f"region_tau{tau:g}"] = str(path)


def _run_checks(
    platoon: PlatoonConfig, gains: ControlGains, checks: ChecksModel, out: Path, manifest: RunManifest
) -> None:
    h, tau = platoon.headway, platoon.delay
    le = gains.lambda_eta(h)
    manifest.metrics.update({"lambda": le.lam, "eta": le.eta})

    if checks.plant:
        manifest.verdicts["plant"] = VerdictSummary.from_verdict(plant_stability_check(le, tau))
    if checks.string_sufficient:
        manifest.verdicts["string_sufficient"] = VerdictSummary.from_verdict(
            string_stability_sufficient(gains, h, tau)
        )
    if checks.string_exact:
        sweep = FrequencySweepConfig.for_gains(gains, h, step=checks.sweep_step)
        manifest.verdicts["string_exact"] = VerdictSummary.from_verdict(
            string_stability_exact(gains, h, tau, sweep)
        )
        path = write_artifact(
            frequency_response(gains, h, tau, sweep), out / "frequency_response.csv", "frequency_response"
        )
        manifest.outputs["frequency_response"] = str(path)


def _run_simulation(
    scenario: SimulationScenario, checks: ChecksModel, out: Path, manifest: RunManifest
) -> None:
    manifest.integrator = {
        "method": scenario.integrator.value,
        "dt": scenario.dt,
        "t_end": scenario.t_end,
        "delay_steps": scenario.delay_steps,
    }

    traj = simulate(scenario)
    manifest.outputs["trajectory"] = str(write_trajectory_csv(traj, out / "trajectory.csv"))
    peaks = peak_spacing_errors(traj)
    manifest.metrics.update(
        {
            "peak_spacing_errors": [float(p) for p in peaks],
            "settling_time": settling_time(traj, checks.settling_tol),
            "settling_tol": checks.settling_tol,
            "diverged": traj.diverged,
        }
    )
    manifest.verdicts["simulation_bounded"] = VerdictSummary(
        ok=not traj.diverged,
        label="diverged" if traj.diverged else "bounded",
        detail=f"{len(traj)} samples",
    )


def _run_sweep(spec: SweepSpec, out: Path, jobs: int, manifest: RunManifest) -> None:
    report = run_sweep(spec, out_dir=out, jobs=jobs)
    manifest.outputs["sweep"] = str(out / "sweep.csv")
    failed = int((report["error"].fillna("") != "").sum()) if not report.empty else 0
    manifest.metrics.update({"sweep_points": len(report), "sweep_failed_points": failed})


def _run_radio(
    request: RadioModel, params: RadioParams, platoon: PlatoonConfig, out: Path, manifest: RunManifest
) -> None:
    carriers = request.carrier_freqs or [params.carrier_freq_hz]
    handovers = request.handover_freqs or [params.handover_freq_hz]

    try:
        table = plan_table(platoon, params, carriers, handovers)
    except RadioPlanningError as e:
        logger.warning(f"Radio plan infeasible: {e}")
        manifest.verdicts["radio"] = VerdictSummary(ok=False, label="infeasible", detail=str(e))
        return

    manifest.outputs["planner"] = str(write_artifact(table, out / "planner.csv", "planner_report"))
    manifest.verdicts["radio"] = VerdictSummary(ok=True, label="feasible", detail=f"{len(table)} cells")
    manifest.metrics["v_max"] = [float(v) for v in table["v_max"]]

    if request.fit_offset:
        reported = {(r.carrier_freq_hz, r.handover_freq_hz): r.v_max for r in request.reported}
        fit = fit_link_budget_offset(platoon, params, reported)
        calibrated = plan_table(platoon, params.with_updates(noise_figure_db=fit.offset_db), carriers, handovers)
        manifest.outputs["planner_calibrated"] = str(
            write_artifact(calibrated, out / "planner_calibrated.csv", "planner_report")
        )
        manifest.metrics.update(
            {"link_budget_offset_db": fit.offset_db, "calibrated_max_abs_error": fit.max_abs_error}
        )


def run_definition(definition: ScenarioDefinition, out_dir: Path, jobs: int = 1) -> RunManifest:
    """Run an already-loaded scenario and write its artifacts under out_dir/<id>."""
    started = time.perf_counter()
    out = Path(out_dir) / definition.id
    manifest = RunManifest(
        scenario_id=definition.id,
        source=str(definition.source),
        config=definition.snapshot,
    )
    logger.info(f"Running scenario '{definition.id}' -> {out}")

    d = definition
    checks = d.checks or ChecksModel()
    if d.region is not None:
        _run_region(d.region, out, manifest)
    if d.checks is not None and d.platoon is not None and d.gains is not None:
        _run_checks(d.platoon, d.gains, d.checks, out, manifest)
    if d.simulation is not None:
        _run_simulation(d.simulation, checks, out, manifest)
    if d.sweep is not None:
        _run_sweep(d.sweep, out, jobs, manifest)
    if d.radio is not None and d.radio_request is not None and d.platoon is not None:
        _run_radio(d.radio_request, d.radio, d.platoon, out, manifest)

    manifest.duration_s = time.perf_counter() - started
    manifest.outputs["manifest"] = str(out / MANIFEST_NAME)
    manifest.write(out / MANIFEST_NAME)
    logger.info(f"Scenario '{definition.id}' finished in {manifest.duration_s:.2f}s (exit {manifest.exit_code})")
    return manifest


def run_scenario(
    name_or_path: str | Path,
    out_dir: Path | None = None,
    dt: float | None = None,
    jobs: int = 1,
) -> RunManifest:
    """
    Load and run a scenario by corpus id or path.

    Args:
        name_or_path: Corpus id (e.g. "fig3c") or scenario file path
        out_dir: Output root; defaults to PLATOON_V2I_OUT_DIR or ./out
        dt: Override of the simulation step
        jobs: Worker processes for sweeps

    Returns:
        RunManifest (also written as manifest.json)
    """
    definition = load_config(name_or_path, dt=dt)
    return run_definition(definition, out_dir or default_out_dir(), jobs=jobs)
