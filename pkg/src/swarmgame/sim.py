"""Monte Carlo simulator of the attacker-vs-swarm observation process.

Observation epochs are exponentially spaced; attacker and honest node
counts accumulate as Poisson processes between epochs.  An episode ends
when the attacker first holds a strict majority (the exit index nu) or
when the epoch horizon is reached.  Episodes are simulated in fixed-size
chunks, each driven by its own counter-based random stream keyed on
(seed, chunk index), so results are bitwise reproducible and independent
of how chunks are scheduled across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .model import SwarmParams, majority_threshold

__all__ = [
    "REGULAR",
    "SAFETY",
    "EpisodeOutcome",
    "SimStats",
    "simulate_episode",
    "estimate",
    "sample_exit_indices",
]

REGULAR = "Regular"
SAFETY = "Safety"

DEFAULT_HORIZON = 10_000
CHUNK = 4096


def _normalize_strategy(strategy: str) -> str:
    name = strategy.capitalize()
    if name not in (REGULAR, SAFETY):
        raise ValueError(f"unknown strategy {strategy!r}; expected Regular or Safety")
    return name


@dataclass(frozen=True)
class EpisodeOutcome:
    """One simulated game.

    nu/mu are None when the corresponding threshold was not reached by
    the time the episode ended (exit or horizon).
    """

    nu: Optional[int]
    mu: Optional[int]
    a_prior: int
    a_exit: int
    allies: int
    burst: bool
    censored: bool


@dataclass(frozen=True)
class SimStats:
    """Aggregated estimators over independent episodes.

    Rates are over all episodes (censored episodes count as no burst);
    mean_nu and mean_a_exit are over non-censored episodes only.
    """

    episodes: int
    burst_rate: float
    burst_se: float
    prior_safe_rate: float
    prior_safe_se: float
    mean_nu: float
    mean_nu_se: float
    mean_a_exit: float
    censored_count: int


def _streams(seed: int, chunk: int):
    """Process and ally generators for one chunk, keyed on (seed, chunk)."""
    base = seed % (1 << 64)
    process = np.random.Generator(np.random.Philox(key=[base, 2 * chunk]))
    allies = np.random.Generator(np.random.Philox(key=[base, 2 * chunk + 1]))
    return process, allies


def simulate_episode(
    params: SwarmParams,
    strategy: str,
    seed: int,
    rho: float = 0.0,
    horizon: int = DEFAULT_HORIZON,
) -> EpisodeOutcome:
    """Simulate one game, deterministically in the seed."""
    strategy = _normalize_strategy(strategy)
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    rng, ally_rng = _streams(seed, 0)
    threshold = majority_threshold(params.M)

    allies = int(ally_rng.binomial(params.candidates, rho)) if strategy == SAFETY else 0

    attacker = honest = 0
    nu = mu = None
    a_prior = a_exit = 0
    for k in range(1, horizon + 1):
        dt = rng.exponential(params.delta0 if k == 1 else params.delta)
        x = int(rng.poisson(params.lambda_a * dt))
        z = int(rng.poisson(params.lambda_h * dt))
        honest += z
        if mu is None and honest >= threshold:
            mu = k
        if attacker + x >= threshold:
            nu = k
            a_prior = attacker
            a_exit = attacker + x
            break
        attacker += x
    censored = nu is None
    if censored:
        a_prior = a_exit = attacker
    burst = (
        not censored
        and a_exit - allies >= threshold
        and (mu is None or nu < mu)
    )
    return EpisodeOutcome(
        nu=nu,
        mu=mu,
        a_prior=a_prior,
        a_exit=a_exit,
        allies=allies,
        burst=burst,
        censored=censored,
    )


def _run_chunk(
    params: SwarmParams,
    strategy: str,
    rho: float,
    seed: int,
    chunk: int,
    size: int,
    horizon: int,
) -> tuple[int, int, int, int, int, int, int]:
    """Simulate one chunk; returns integer sums so aggregation is exact."""
    rng, ally_rng = _streams(seed, chunk)
    threshold = majority_threshold(params.M)
    half = params.M / 2

    attacker = np.zeros(size, dtype=np.int64)
    honest = np.zeros(size, dtype=np.int64)
    nu = np.zeros(size, dtype=np.int64)
    a_prior = np.zeros(size, dtype=np.int64)
    a_exit = np.zeros(size, dtype=np.int64)
    honest_below = np.zeros(size, dtype=bool)
    active = np.ones(size, dtype=bool)

    k = 0
    while active.any() and k < horizon:
        k += 1
        mean = params.delta0 if k == 1 else params.delta
        dt = rng.exponential(mean, size=size)
        x = rng.poisson(params.lambda_a * dt)
        z = rng.poisson(params.lambda_h * dt)
        crossing = active & (attacker + x >= threshold)
        nu[crossing] = k
        a_prior[crossing] = attacker[crossing]
        a_exit[crossing] = (attacker + x)[crossing]
        honest_below[crossing] = (honest + z)[crossing] < threshold
        still = active & ~crossing
        attacker[still] += x[still]
        honest[still] += z[still]
        active = still

    censored = active
    a_prior[censored] = attacker[censored]
    a_exit[censored] = attacker[censored]

    if strategy == SAFETY:
        allies = ally_rng.binomial(params.candidates, rho, size=size)
    else:
        allies = np.zeros(size, dtype=np.int64)

    burst = ~censored & (a_exit - allies >= threshold) & honest_below
    prior_safe = a_prior < half
    done = ~censored
    return (
        int(burst.sum()),
        int(prior_safe.sum()),
        int(nu[done].sum()),
        int((nu[done] ** 2).sum()),
        int(a_exit[done].sum()),
        int(censored.sum()),
        int(done.sum()),
    )


def sample_exit_indices(
    params: SwarmParams,
    episodes: int,
    seed: int,
    horizon: int = DEFAULT_HORIZON,
) -> tuple[np.ndarray, int]:
    """Exit indices of non-censored episodes, plus the censored count.

    Uses the same chunked streams as ``estimate`` with the Regular
    strategy, so episode i here is episode i there.
    """
    if episodes < 1:
        raise ValueError(f"episodes must be >= 1, got {episodes}")
    threshold = majority_threshold(params.M)
    collected = []
    censored_total = 0
    for chunk, start in enumerate(range(0, episodes, CHUNK)):
        size = min(CHUNK, episodes - start)
        rng, _ = _streams(seed, chunk)
        attacker = np.zeros(size, dtype=np.int64)
        nu = np.zeros(size, dtype=np.int64)
        active = np.ones(size, dtype=bool)
        k = 0
        while active.any() and k < horizon:
            k += 1
            mean = params.delta0 if k == 1 else params.delta
            dt = rng.exponential(mean, size=size)
            x = rng.poisson(params.lambda_a * dt)
            rng.poisson(params.lambda_h * dt)  # keep stream layout identical
            crossing = active & (attacker + x >= threshold)
            nu[crossing] = k
            still = active & ~crossing
            attacker[still] += x[still]
            active = still
        censored_total += int(active.sum())
        collected.append(nu[~active])
    return np.concatenate(collected), censored_total


def estimate(
    params: SwarmParams,
    strategy: str,
    episodes: int,
    seed: int,
    rho: float = 0.0,
    horizon: int = DEFAULT_HORIZON,
    workers: int = 1,
) -> SimStats:
    """Aggregate independent episodes into SimStats.

    The chunk layout depends only on (episodes, seed), and per-chunk
    results are integer sums folded in chunk order, so the outcome is
    identical for any worker count.
    """
    strategy = _normalize_strategy(strategy)
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    if episodes < 1:
        raise ValueError(f"episodes must be >= 1, got {episodes}")

    sizes = [
        min(CHUNK, episodes - start) for start in range(0, episodes, CHUNK)
    ]

    def run(chunk: int):
        return _run_chunk(
            params, strategy, rho, seed, chunk, sizes[chunk], horizon
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(len(sizes))))
    else:
        results = [run(c) for c in range(len(sizes))]

    burst = safe = nu_sum = nu_sq = exit_sum = censored = done = 0
    for b, s, ns, nq, es, ce, dn in results:
        burst += b
        safe += s
        nu_sum += ns
        nu_sq += nq
        exit_sum += es
        censored += ce
        done += dn

    n = episodes
    burst_rate = burst / n
    safe_rate = safe / n
    if done > 0:
        mean_nu = nu_sum / done
        var_nu = max(nu_sq / done - mean_nu**2, 0.0)
        mean_nu_se = math.sqrt(var_nu / done)
        mean_a_exit = exit_sum / done
    else:
        mean_nu = math.nan
        mean_nu_se = 0.0
        mean_a_exit = math.nan
    return SimStats(
        episodes=n,
        burst_rate=burst_rate,
        burst_se=math.sqrt(burst_rate * (1.0 - burst_rate) / n),
        prior_safe_rate=safe_rate,
        prior_safe_se=math.sqrt(safe_rate * (1.0 - safe_rate) / n),
        mean_nu=mean_nu,
        mean_nu_se=mean_nu_se,
        mean_a_exit=mean_a_exit,
        censored_count=censored,
    )
