"""Suite configuration: schema, JSON ingestion, and key=value overrides.

The configuration is one JSON document; every CLI flag of the form
`--set section.key=value` overrides the corresponding entry before
validation.  Node counts must be a power of two plus one so that grid
doubling ladders nest exactly.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path

from .numerics import Tolerances

__all__ = ["GridSettings", "SuiteConfig", "ConfigError", "load_config", "apply_overrides"]

ALL_SUITES = ("algebra", "splitting", "fourier", "hardy", "compact-pw", "bergman")


class ConfigError(ValueError):
    """Invalid configuration; message names the offending field."""


def _is_pow2_plus_1(count: int) -> bool:
    return count >= 3 and ((count - 1) & (count - 2)) == 0


@dataclass(frozen=True)
class GridSettings:
    """Domains and node counts for the verification grids."""

    line_halfwidth: float = 100.0
    line_count: int = 4097
    hardy_halfwidth: float = 400.0
    hardy_count: int = 8193
    spectral_halfwidth: float = 24.0
    spectral_count: int = 2049
    extraction_halfwidth: float = 3200.0
    extraction_count: int = 65537

    def validate(self) -> None:
        for name in ("line_count", "hardy_count", "spectral_count", "extraction_count"):
            count = getattr(self, name)
            if not _is_pow2_plus_1(count):
                raise ConfigError(f"grids.{name} must be a power of two plus one, got {count}")
        for name in ("line_halfwidth", "hardy_halfwidth", "spectral_halfwidth", "extraction_halfwidth"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"grids.{name} must be positive")


@dataclass(frozen=True)
class SuiteConfig:
    """Full run configuration; defaults reproduce the reference battery."""

    n: int = 3
    rng_seed: int = 20240813
    slice_count: int = 3
    grids: GridSettings = field(default_factory=GridSettings)
    tolerances: Tolerances = field(default_factory=Tolerances)
    p_values: tuple[float, ...] = (1.0, 1.5, 2.0)
    suites: tuple[str, ...] = ALL_SUITES

    def validate(self) -> None:
        if not 2 <= self.n <= 12:
            raise ConfigError(f"n must be in [2, 12], got {self.n}")
        if self.slice_count < 1:
            raise ConfigError(f"slice_count must be >= 1, got {self.slice_count}")
        self.grids.validate()
        for tol_name in ("quadrature_tol", "identity_tol", "theorem_tol", "support_tol"):
            if getattr(self.tolerances, tol_name) <= 0:
                raise ConfigError(f"tolerances.{tol_name} must be positive")
        for p in self.p_values:
            if not 1.0 <= p <= 2.0:
                raise ConfigError(f"p_values entries must lie in [1, 2], got {p}")
        for s in self.suites:
            if s not in ALL_SUITES:
                raise ConfigError(
                    f"unknown suite {s!r}; valid suites: {', '.join(ALL_SUITES)}"
                )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["p_values"] = list(self.p_values)
        d["suites"] = list(self.suites)
        return d


def _config_from_dict(data: dict) -> SuiteConfig:
    known = {"n", "rng_seed", "slice_count", "grids", "tolerances", "p_values", "suites"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    kwargs: dict = {}
    for key in ("n", "rng_seed", "slice_count"):
        if key in data:
            kwargs[key] = int(data[key])
    if "grids" in data:
        try:
            kwargs["grids"] = GridSettings(**data["grids"])
        except TypeError as exc:
            raise ConfigError(f"grids: {exc}") from exc
    if "tolerances" in data:
        try:
            kwargs["tolerances"] = Tolerances(**data["tolerances"])
        except TypeError as exc:
            raise ConfigError(f"tolerances: {exc}") from exc
    if "p_values" in data:
        kwargs["p_values"] = tuple(float(p) for p in data["p_values"])
    if "suites" in data:
        kwargs["suites"] = tuple(str(s) for s in data["suites"])
    return SuiteConfig(**kwargs)


def load_config(path: str | Path | None) -> SuiteConfig:
    """Read a JSON config; a missing path yields the defaults."""
    if path is None:
        return SuiteConfig()
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    return _config_from_dict(data)


def _coerce(text: str):
    low = text.lower()
    if low in ("true", "false"):
        return low == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        pass
    if "," in text:
        return [t.strip() for t in text.split(",") if t.strip()]
    return text


def apply_overrides(cfg: SuiteConfig, overrides: list[str]) -> SuiteConfig:
    """Apply `section.key=value` (or `key=value`) strings onto a config."""
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        key, text = item.split("=", 1)
        value = _coerce(text)
        parts = key.strip().split(".")
        if len(parts) == 1:
            name = parts[0]
            if name == "p_values":
                value = tuple(float(v) for v in (value if isinstance(value, list) else [value]))
            elif name == "suites":
                value = tuple(value if isinstance(value, list) else [value])
            if name not in SuiteConfig.__dataclass_fields__:
                raise ConfigError(f"unknown config key {name!r}")
            cfg = replace(cfg, **{name: value})
        elif len(parts) == 2:
            section, name = parts
            if section == "grids":
                if name not in GridSettings.__dataclass_fields__:
                    raise ConfigError(f"unknown grids key {name!r}")
                cfg = replace(cfg, grids=replace(cfg.grids, **{name: value}))
            elif section == "tolerances":
                if name not in Tolerances.__dataclass_fields__:
                    raise ConfigError(f"unknown tolerances key {name!r}")
                cfg = replace(cfg, tolerances=replace(cfg.tolerances, **{name: value}))
            else:
                raise ConfigError(f"unknown config section {section!r}")
        else:
            raise ConfigError(f"override key {key!r} nests too deep")
    cfg.validate()
    return cfg
