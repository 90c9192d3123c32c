"""Command-line interface: analyze, simulate, sweep, optimize.

All commands read a `key = value` config file; a few flags override
config values.  Curve output is CSV with a fixed schema so runs can be
diffed byte-for-byte and plotted with any external tool.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .config import ConfigError, RunConfig, parse_config
from .fluctuation import expected_exit_index
from .model import CostBreakdown, SwarmParams, total_cost
from .optimize import optimize as optimize_rho
from .optimize import sweep as sweep_curve
from .sim import REGULAR, SAFETY, SimStats, estimate

CSV_HEADER = "rho,ally_cost,p_prior,q0,q1,total"


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _csv_rows(curve) -> str:
    lines = [CSV_HEADER]
    for point in curve:
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    point.rho,
                    point.ally_cost,
                    point.p_prior,
                    point.q0,
                    point.q1,
                    point.total,
                )
            )
        )
    return "\n".join(lines) + "\n"


def _resolve_params(config: RunConfig) -> SwarmParams:
    """Build SwarmParams, running the exit-index transform in auto mode."""
    if config.expected_nu != "auto":
        return config.to_params()
    nu = expected_exit_index(config.to_params(expected_nu=3.0))
    if not math.isfinite(nu):
        raise RuntimeError(
            "auto expected_nu failed: the exit-index transform is singular "
            "(lambda_a = 0 means the attacker never exits)"
        )
    return config.to_params(expected_nu=nu)


def _print_breakdown(point: CostBreakdown) -> None:
    print(f"rho        = {_fmt(point.rho)}")
    print(f"ally_cost  = {_fmt(point.ally_cost)}")
    print(f"p_prior    = {_fmt(point.p_prior)}")
    print(f"q0         = {_fmt(point.q0)}")
    print(f"q1         = {_fmt(point.q1)}")
    print(f"total      = {_fmt(point.total)}")


def _print_stats(label: str, stats: SimStats) -> None:
    print(f"[{label}]")
    print(f"  episodes        = {stats.episodes}")
    print(f"  burst_rate      = {_fmt(stats.burst_rate)} (se {_fmt(stats.burst_se)})")
    print(
        f"  prior_safe_rate = {_fmt(stats.prior_safe_rate)}"
        f" (se {_fmt(stats.prior_safe_se)})"
    )
    print(f"  mean_nu         = {_fmt(stats.mean_nu)} (se {_fmt(stats.mean_nu_se)})")
    print(f"  mean_a_exit     = {_fmt(stats.mean_a_exit)}")
    print(f"  censored        = {stats.censored_count}")


def _cmd_analyze(config: RunConfig, args) -> int:
    params = _resolve_params(config)
    _print_breakdown(total_cost(params, config.rho))
    return 0


def _cmd_simulate(config: RunConfig, args) -> int:
    params = _resolve_params(config)
    for strategy in (REGULAR, SAFETY):
        stats = estimate(
            params,
            strategy,
            episodes=config.episodes,
            seed=config.seed,
            rho=config.rho,
            workers=args.workers,
        )
        _print_stats(strategy, stats)
    return 0


def _cmd_sweep(config: RunConfig, args) -> int:
    params = _resolve_params(config)
    curve = sweep_curve(params, config.grid_size)
    out = Path(args.out or "sweep.csv")
    out.write_text(_csv_rows(curve))
    print(f"wrote {len(curve)} grid points to {out}")
    return 0


def _cmd_optimize(config: RunConfig, args) -> int:
    params = _resolve_params(config)
    result = optimize_rho(params, tolerance=config.tolerance, grid_size=config.grid_size)
    print(f"rho_star   = {_fmt(result.rho_star)}")
    print(f"cost_star  = {_fmt(result.cost_star)}")
    print(f"feasible   = {result.feasible}")
    print(f"n_required = {result.n_required}")
    out = Path(args.out or "optimize.csv")
    out.write_text(_csv_rows(result.curve))
    print(f"wrote {len(result.curve)} grid points to {out}")
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
    "optimize": _cmd_optimize,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swarmgame",
        description="Swarm majority-takeover defense: costs, simulation, optimization",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", required=True, help="path to a key = value config")
    parser.add_argument("--rho", type=float, help="override the configured rho")
    parser.add_argument("--episodes", type=int, help="override simulation episodes")
    parser.add_argument("--seed", type=int, help="override the random seed")
    parser.add_argument("--out", help="output CSV path for sweep/optimize")
    parser.add_argument(
        "--workers", type=int, default=1, help="worker threads for simulate"
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = parse_config(Path(args.config).read_text())
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    overrides = {}
    if args.rho is not None:
        if not 0.0 <= args.rho <= 1.0:
            print(f"error: --rho must lie in [0, 1], got {args.rho}", file=sys.stderr)
            return 2
        overrides["rho"] = args.rho
    if args.episodes is not None:
        overrides["episodes"] = args.episodes
    if args.seed is not None:
        overrides["seed"] = args.seed
    if overrides:
        from dataclasses import replace

        config = replace(config, **overrides)

    try:
        return _COMMANDS[args.command](config, args)
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
