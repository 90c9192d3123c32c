"""Swarm majority-takeover defense model.

Analytic burst probabilities and defense costs, an exit-index transform
built on truncated power series, a Monte Carlo simulator of the
attacker-vs-swarm observation process, and a cost-minimizing
ally-reservation optimizer.
"""

from .config import ConfigError, RunConfig, parse_config
from .fluctuation import (
    TransformPoint,
    exit_index_pgf,
    expected_exit_index,
    interval_transform,
    phi,
    sigma_transform,
)
from .kernels import binom_pmf, pois_cdf, pois_pmf, pois_tail
from .model import (
    AllyRequirement,
    CostBreakdown,
    CostMatrix,
    StrategyChoice,
    SwarmParams,
    ally_cost,
    burst_prob_regular,
    burst_prob_safety,
    choose_strategy,
    exit_mean_count,
    majority_threshold,
    min_allies,
    prior_safe_prob,
    total_cost,
)
from .optimize import OptimalRho, optimize, sweep
from .series import TruncSeries, d_operator, series_div, series_mul
from .sim import REGULAR, SAFETY, EpisodeOutcome, SimStats, estimate, simulate_episode

__version__ = "0.1.0"

__all__ = [
    "AllyRequirement",
    "ConfigError",
    "CostBreakdown",
    "CostMatrix",
    "EpisodeOutcome",
    "OptimalRho",
    "REGULAR",
    "RunConfig",
    "SAFETY",
    "SimStats",
    "StrategyChoice",
    "SwarmParams",
    "TransformPoint",
    "TruncSeries",
    "ally_cost",
    "binom_pmf",
    "burst_prob_regular",
    "burst_prob_safety",
    "choose_strategy",
    "d_operator",
    "estimate",
    "exit_index_pgf",
    "exit_mean_count",
    "expected_exit_index",
    "interval_transform",
    "majority_threshold",
    "min_allies",
    "optimize",
    "parse_config",
    "phi",
    "pois_cdf",
    "pois_pmf",
    "pois_tail",
    "prior_safe_prob",
    "series_div",
    "series_mul",
    "sigma_transform",
    "simulate_episode",
    "sweep",
    "total_cost",
]
