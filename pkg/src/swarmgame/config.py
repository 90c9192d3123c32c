"""Run configuration: `key = value` text with `#` comments.

The format is deliberately minimal so configs diff cleanly in tests and
can be written by hand.  Unknown keys and malformed values are rejected
with the offending key and line number.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from .model import SwarmParams

__all__ = ["ConfigError", "RunConfig", "parse_config"]


class ConfigError(ValueError):
    """Raised for unknown keys, malformed values, or invariant violations."""


@dataclass(frozen=True)
class RunConfig:
    M: int
    drone_value: float
    lambda_a: float
    delta0: float
    delta: float
    lambda_h: float = 0.0
    expected_nu: Union[float, str] = 3.0  # a number, or "auto"
    ally_unit_cost: float = 3.0
    rho: float = 0.0
    episodes: int = 100_000
    seed: int = 42
    grid_size: int = 101
    tolerance: float = 1e-5

    def to_params(self, expected_nu: float | None = None) -> SwarmParams:
        """Build SwarmParams; expected_nu overrides the "auto" marker."""
        nu = expected_nu
        if nu is None:
            if self.expected_nu == "auto":
                raise ConfigError(
                    "expected_nu is 'auto'; resolve it before building params"
                )
            nu = float(self.expected_nu)
        return SwarmParams(
            M=self.M,
            drone_value=self.drone_value,
            lambda_a=self.lambda_a,
            lambda_h=self.lambda_h,
            delta0=self.delta0,
            delta=self.delta,
            expected_nu=nu,
            ally_unit_cost=self.ally_unit_cost,
        )


_REQUIRED = ("M", "drone_value", "lambda_a", "delta0", "delta")

_PARSERS = {
    "M": int,
    "drone_value": float,
    "lambda_a": float,
    "lambda_h": float,
    "delta0": float,
    "delta": float,
    "ally_unit_cost": float,
    "rho": float,
    "episodes": int,
    "seed": int,
    "grid_size": int,
    "tolerance": float,
}


def parse_config(text: str) -> RunConfig:
    """Parse and validate a config; raises ConfigError on any defect."""
    values: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key in values:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        if key == "expected_nu":
            if value == "auto":
                values[key] = "auto"
            else:
                try:
                    values[key] = float(value)
                except ValueError:
                    raise ConfigError(
                        f"line {lineno}: key 'expected_nu' must be a number "
                        f"or 'auto', got {value!r}"
                    ) from None
            continue
        if key not in _PARSERS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _PARSERS[key](value)
        except ValueError:
            raise ConfigError(
                f"line {lineno}: malformed value for key {key!r}: {value!r}"
            ) from None

    for key in _REQUIRED:
        if key not in values:
            raise ConfigError(f"missing required key {key!r}")

    config = RunConfig(**values)  # type: ignore[arg-type]
    _validate(config)
    return config


def _validate(config: RunConfig) -> None:
    if config.episodes < 1:
        raise ConfigError(f"key 'episodes' must be >= 1, got {config.episodes}")
    if config.grid_size < 2:
        raise ConfigError(f"key 'grid_size' must be >= 2, got {config.grid_size}")
    if config.tolerance <= 0:
        raise ConfigError(f"key 'tolerance' must be positive, got {config.tolerance}")
    if not 0.0 <= config.rho <= 1.0:
        raise ConfigError(f"key 'rho' must lie in [0, 1], got {config.rho}")
    # SwarmParams invariants, surfaced as config errors with the key name.
    try:
        nu = 3.0 if config.expected_nu == "auto" else float(config.expected_nu)
        replace(config, expected_nu=nu).to_params()
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
