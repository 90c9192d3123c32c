"""Exit-index transforms for the attacker-vs-swarm observation process.

The attacker's node count accumulates as a Poisson process sampled at
exponentially spaced observation epochs, so every one-interval transform
is a rational function.  Chaining those transforms as truncated power
series and extracting partial coefficient sums yields the joint
functional of the exit index nu (the first observation at which the
attacker holds a strict majority), the pre-exit and exit counts, and the
ally discount, together with the exit-index PGF and its mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import SwarmParams, majority_threshold
from .series import TruncSeries, d_operator

__all__ = [
    "TransformPoint",
    "interval_transform",
    "interval_transform_series",
    "sigma_transform",
    "phi",
    "exit_index_pgf",
    "expected_exit_index",
]


@dataclass(frozen=True)
class TransformPoint:
    """Arguments of the joint functional; all magnitudes must be <= 1."""

    xi: float = 1.0
    g0: float = 1.0
    g1: float = 1.0
    b: float = 1.0
    z0: float = 1.0
    z1: float = 1.0

    def __post_init__(self) -> None:
        for name in ("xi", "g0", "g1", "b", "z0", "z1"):
            value = getattr(self, name)
            if abs(value) > 1.0:
                raise ValueError(f"|{name}| must be <= 1, got {value}")


def interval_transform(
    g: float, z: float, mean: float, lambda_a: float, lambda_h: float
) -> float:
    """Joint transform of the attacker/honest increments over one interval.

    For an exponentially distributed interval of the given mean,
    E[g^X z^Z] = 1 / (1 + lambda_a*mean*(1-g) + lambda_h*mean*(1-z)).
    """
    if mean <= 0:
        raise ValueError(f"mean must be positive, got {mean}")
    return 1.0 / (1.0 + lambda_a * mean * (1.0 - g) + lambda_h * mean * (1.0 - z))


def interval_transform_series(
    degrees: tuple[int, int, int],
    mean: float,
    lambda_a: float,
    lambda_h: float,
    g_scalar: float,
    g_exponents: tuple[int, int, int],
    z_scalar: float,
) -> TruncSeries:
    """One-interval transform with its attacker argument set to a monomial.

    Substituting g = g_scalar * q^i r^j s^k into the transform gives a
    rational series expanded by truncated division:
    1 / (1 + lambda_a*mean*(1 - g_scalar*q^i r^j s^k)
           + lambda_h*mean*(1 - z_scalar)).
    """
    if mean <= 0:
        raise ValueError(f"mean must be positive, got {mean}")
    denom = (
        TruncSeries.constant(
            1.0 + lambda_a * mean + lambda_h * mean * (1.0 - z_scalar), degrees
        )
        - TruncSeries.monomial(lambda_a * mean * g_scalar, g_exponents, degrees)
    )
    return TruncSeries.constant(1.0, degrees) / denom


def sigma_transform(b: float, rho: float, candidates: int) -> float:
    """E[b^-B] for B ~ Binomial(candidates, rho)."""
    if b == 0.0:
        raise ZeroDivisionError("sigma transform is singular at b = 0")
    if not 0.0 <= rho <= 1.0:
        raise ValueError(f"rho must lie in [0, 1], got {rho}")
    if candidates < 0:
        raise ValueError(f"candidates must be nonnegative, got {candidates}")
    return (1.0 - rho + rho / b) ** candidates


def _phi_values(
    xi: float,
    g0: float,
    g1: float,
    b: float,
    z0: float,
    z1: float,
    params: SwarmParams,
    rho: float,
) -> float:
    """Joint functional without argument-magnitude validation.

    Kept separate so the PGF derivative may probe just outside xi = 1.
    """
    la, lh = params.lambda_a, params.lambda_h
    if la == 0.0:
        # The attacker never advances: nu is infinite, so xi^nu vanishes
        # for |xi| < 1 while the normalization at xi = 1 is preserved.
        return 1.0 if xi == 1.0 else 0.0

    m = majority_threshold(params.M) - 1
    degrees = (m, m, m)

    def transform(mean, g_scalar, g_exponents, z_scalar):
        return interval_transform_series(
            degrees, mean, la, lh, g_scalar, g_exponents, z_scalar
        )

    d0, d = params.delta0, params.delta
    # Pre-exit increments are marked in both q and r; the exit increment in
    # q only.  The honest side enters through the scalar z-arguments.
    theta = transform(d, g0 * g1 * b, (1, 1, 0), z0 * z1)
    theta0 = transform(d0, g0 * g1 * b, (1, 1, 0), z0 * z1)
    gamma = transform(d, g1 * b, (1, 0, 0), z1)
    gamma0 = transform(d0, g1 * b, (1, 0, 0), z1)
    gamma_1 = transform(d, g1 * b, (0, 0, 0), z1)
    gamma0_1 = transform(d0, g1 * b, (0, 0, 0), z1)

    one = TruncSeries.constant(1.0, degrees)
    # First term: the attacker crosses during the very first interval;
    # geometric tail: it crosses at a later epoch after a run of pre-exit
    # intervals whose counts stay at or below the truncation level.
    lam = xi * (gamma0_1 - gamma0) + ((xi * xi) * theta0 / (one - xi * theta)) * (
        gamma_1 - gamma
    )
    sigma = sigma_transform(b, rho, params.candidates)
    return sigma * d_operator(lam)


def phi(point: TransformPoint, params: SwarmParams, rho: float = 0.0) -> float:
    """Joint transform of (nu, pre-exit count, exit count, ally discount).

    The ally-acceptance probability rho enters only through the factor
    E[b^-B]; at b = 1 (in particular for the exit-index marginal) it has
    no effect.
    """
    return _phi_values(
        point.xi, point.g0, point.g1, point.b, point.z0, point.z1, params, rho
    )


def exit_index_pgf(xi: float, params: SwarmParams) -> float:
    """E[xi^nu], the PGF of the exit index."""
    if abs(xi) > 1.0:
        raise ValueError(f"|xi| must be <= 1, got {xi}")
    return _phi_values(xi, 1.0, 1.0, 1.0, 1.0, 1.0, params, 0.0)


def expected_exit_index(params: SwarmParams) -> float:
    """E[nu] via a Richardson-refined central difference of the PGF at 1.

    Infinite when the attacker rate is zero.
    """
    if params.lambda_a == 0.0:
        return math.inf

    def central(h: float) -> float:
        hi = _phi_values(1.0 + h, 1.0, 1.0, 1.0, 1.0, 1.0, params, 0.0)
        lo = _phi_values(1.0 - h, 1.0, 1.0, 1.0, 1.0, 1.0, params, 0.0)
        return (hi - lo) / (2.0 * h)

    h = 1e-4
    refined = (4.0 * central(h / 2.0) - central(h)) / 3.0
    return max(refined, 1.0)
