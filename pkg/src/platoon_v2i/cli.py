# ADR: 2026-10-01-delay-aware-platoon-toolkit
"""
Command-line interface.

Commands:
    platoon-v2i simulate --config <path>
    platoon-v2i stability region --tau 0.1 0.2 0.3
    platoon-v2i stability check (--lambda L --eta E | --config <path>) [--tau T]
    platoon-v2i string check (--gains KV KVO KX KXO --headway H --tau T | --config <path>)
    platoon-v2i radio plan --config <path> [--target-velocity V]
    platoon-v2i sweep --config <path> [--jobs N]
    platoon-v2i corpus run <id> | corpus list

Exit codes: 0 all verdicts stable/feasible, 2 an unstable or infeasible
verdict, 1 execution error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from platoon_v2i import __version__
from platoon_v2i.config.loader import ScenarioDefinition, load_config, scenario_description
from platoon_v2i.config.paths import default_out_dir, list_scenarios
from platoon_v2i.core.types import ControlGains, LambdaEta
from platoon_v2i.dynamics.export import write_trajectory_csv
from platoon_v2i.dynamics.metrics import peak_spacing_errors, settling_time
from platoon_v2i.dynamics.simulator import simulate
from platoon_v2i.exceptions import ConfigurationError, PlatoonError
from platoon_v2i.radio.planner import min_antennas, plan_table
from platoon_v2i.scenarios.artifacts import write_artifact
from platoon_v2i.scenarios.runner import (
    EXIT_ERROR,
    EXIT_NEGATIVE_VERDICT,
    EXIT_OK,
    VerdictSummary,
    run_scenario,
)
from platoon_v2i.scenarios.sweep import run_sweep
from platoon_v2i.stability.plant import corner_eta, plant_stability_check, region_boundary_frame
from platoon_v2i.stability.string import (
    FrequencySweepConfig,
    string_stability_exact,
    string_stability_sufficient,
)
from platoon_v2i.validation.reporter import REPORT_WIDTH, format_run_report, format_verdict_line

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _out_dir(args: argparse.Namespace) -> Path:
    return Path(args.out) if args.out else default_out_dir()


def _require(definition: ScenarioDefinition, section: str) -> None:
    if getattr(definition, section) is None:
        raise ConfigurationError(f"{definition.source}: scenario has no '{section}' section")


def cmd_simulate(args: argparse.Namespace) -> int:
    """Integrate the configured platoon and write trajectory.csv."""
    definition = load_config(args.config, dt=args.dt)
    _require(definition, "simulation")
    scenario = definition.simulation
    traj = simulate(scenario)
    tol = definition.checks.settling_tol if definition.checks else 1e-3
    path = write_trajectory_csv(traj, _out_dir(args) / definition.id / "trajectory.csv")

    peaks = ", ".join(f"{p:.4g}" for p in peak_spacing_errors(traj))
    settle = settling_time(traj, tol)
    print(f"Trajectory: {path} ({len(traj)} samples)")
    print(f"Peak |e_i| (m): {peaks}")
    print(f"Settling (tol {tol:g} m): {'never' if settle is None else f'{settle:.3f} s'}")
    if traj.diverged:
        print("[!!] Trajectory diverged and was truncated")
        return EXIT_NEGATIVE_VERDICT
    return EXIT_OK


def cmd_stability_region(args: argparse.Namespace) -> int:
    """Write D-curve samples for each delay."""
    out = _out_dir(args) / "region"
    for tau in args.tau:
        frame = region_boundary_frame(tau, args.n_points)
        path = write_artifact(frame, out / f"region_tau{tau:g}.csv", "region_boundary")
        print(f"tau={tau:g}: corner eta={corner_eta(tau):.6g} -> {path}")
    return EXIT_OK


def _gains_from_args(args: argparse.Namespace) -> tuple[ControlGains, float, float]:
    if args.config:
        definition = load_config(args.config)
        if definition.gains is None or definition.platoon is None:
            raise ConfigurationError(f"{definition.source}: scenario needs platoon and gains")
        tau = args.tau if args.tau is not None else definition.platoon.delay
        return definition.gains, definition.platoon.headway, tau
    if args.gains is None or args.headway is None or args.tau is None:
        raise ConfigurationError("Give --config, or --gains KV KVO KX KXO with --headway and --tau")
    return ControlGains.from_table_row(args.gains), args.headway, args.tau


def cmd_stability_check(args: argparse.Namespace) -> int:
    """Plant-stability membership of one (lambda, eta) pair."""
    if args.lam is not None and args.eta is not None:
        if args.tau is None:
            raise ConfigurationError("--tau is required with --lambda/--eta")
        le, tau = LambdaEta(lam=args.lam, eta=args.eta), args.tau
    else:
        gains, h, tau = _gains_from_args(args)
        le = gains.lambda_eta(h)

    verdict = VerdictSummary.from_verdict(plant_stability_check(le, tau))
    print(f"lambda={le.lam:.6g}, eta={le.eta:.6g}, tau={tau:g}")
    print(format_verdict_line("plant", verdict))
    return EXIT_OK if verdict.ok else EXIT_NEGATIVE_VERDICT


def cmd_string_check(args: argparse.Namespace) -> int:
    """Sufficient and exact string-stability verdicts."""
    gains, h, tau = _gains_from_args(args)
    sweep = FrequencySweepConfig.for_gains(gains, h, step=args.step)
    sufficient = VerdictSummary.from_verdict(string_stability_sufficient(gains, h, tau))
    exact = VerdictSummary.from_verdict(string_stability_exact(gains, h, tau, sweep))
    print(format_verdict_line("string_sufficient", sufficient))
    print(format_verdict_line("string_exact", exact))
    return EXIT_OK if exact.ok else EXIT_NEGATIVE_VERDICT


def cmd_radio_plan(args: argparse.Namespace) -> int:
    """Planner table for the configured radio grid."""
    definition = load_config(args.config)
    _require(definition, "radio")
    request, params, platoon = definition.radio_request, definition.radio, definition.platoon
    carriers = request.carrier_freqs or [params.carrier_freq_hz]
    handovers = request.handover_freqs or [params.handover_freq_hz]

    table = plan_table(platoon, params, carriers, handovers)
    path = write_artifact(table, _out_dir(args) / definition.id / "planner.csv", "planner_report")
    print(table.to_string(index=False))
    print(f"Planner report: {path}")

    if args.target_velocity is not None:
        n = min_antennas(platoon, params, args.target_velocity)
        print(f"Minimum antennas for {args.target_velocity:g} m/s: N={n}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    """Run the configured parameter sweep."""
    definition = load_config(args.config, dt=args.dt)
    _require(definition, "sweep")
    out = _out_dir(args) / definition.id
    report = run_sweep(definition.sweep, out_dir=out, jobs=args.jobs)
    failed = int((report["error"].fillna("") != "").sum()) if not report.empty else 0
    print(f"Sweep: {len(report)} points, {failed} failed -> {out / 'sweep.csv'}")
    return EXIT_OK


def cmd_corpus_run(args: argparse.Namespace) -> int:
    """Run one corpus scenario end to end."""
    manifest = run_scenario(args.id, out_dir=_out_dir(args), dt=args.dt, jobs=args.jobs)
    print(format_run_report(manifest))
    return manifest.exit_code


def cmd_corpus_list(args: argparse.Namespace) -> int:
    """List corpus ids with their descriptions."""
    print("=" * REPORT_WIDTH)
    for path in list_scenarios():
        description = scenario_description(path)
        print(f"  {path.stem:<16} {description}")
    print("=" * REPORT_WIDTH)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="Output directory (default: PLATOON_V2I_OUT_DIR or ./out)")
    parser.add_argument("--dt", type=float, help="Override the simulation step (s)")
    parser.add_argument("--jobs", type=int, default=1, help="Worker processes for sweeps")
    parser.add_argument("--seed", type=int, help="Reserved; runs are deterministic")


def _add_gain_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="Scenario file or corpus id providing platoon and gains")
    parser.add_argument("--gains", type=float, nargs=4, metavar=("KV", "KVO", "KX", "KXO"))
    parser.add_argument("--headway", type=float, help="Time headway h (s)")
    parser.add_argument("--tau", type=float, help="Delay tau (s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platoon-v2i",
        description="Delay-aware V2I platoon control: simulation, stability regions and radio planning",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="Simulate one scenario")
    p.add_argument("--config", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_simulate)

    stability = sub.add_parser("stability", help="Plant-stability tools").add_subparsers(
        dest="action", required=True
    )
    p = stability.add_parser("region", help="Export D-curve boundaries")
    p.add_argument("--tau", type=float, nargs="+", default=[0.1, 0.2, 0.3])
    p.add_argument("--n-points", type=int, default=200)
    _add_common(p)
    p.set_defaults(func=cmd_stability_region)

    p = stability.add_parser("check", help="Plant-stability membership")
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--eta", type=float)
    _add_gain_inputs(p)
    _add_common(p)
    p.set_defaults(func=cmd_stability_check)

    string = sub.add_parser("string", help="String-stability tools").add_subparsers(
        dest="action", required=True
    )
    p = string.add_parser("check", help="Sufficient and exact string verdicts")
    p.add_argument("--step", type=float, default=1e-3, help="Frequency sweep step (rad/s)")
    _add_gain_inputs(p)
    _add_common(p)
    p.set_defaults(func=cmd_string_check)

    radio = sub.add_parser("radio", help="Radio planning").add_subparsers(dest="action", required=True)
    p = radio.add_parser("plan", help="Handover planner table")
    p.add_argument("--config", required=True)
    p.add_argument("--target-velocity", type=float, help="Also report the minimum antenna count")
    _add_common(p)
    p.set_defaults(func=cmd_radio_plan)

    p = sub.add_parser("sweep", help="Parameter sweep")
    p.add_argument("--config", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    corpus = sub.add_parser("corpus", help="Shipped scenario corpus").add_subparsers(
        dest="action", required=True
    )
    p = corpus.add_parser("run", help="Run one corpus scenario")
    p.add_argument("id")
    _add_common(p)
    p.set_defaults(func=cmd_corpus_run)

    p = corpus.add_parser("list", help="List corpus scenarios")
    p.set_defaults(func=cmd_corpus_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    """CLI entrypoint."""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format=LOG_FORMAT)

    try:
        return args.func(args)
    except PlatoonError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
