"""Global numeric tolerances and run configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace
from pathlib import Path


@dataclass(frozen=True)
class Tolerances:
    """Comparison policy shared by every check.

    A strict or non-strict inequality is accepted when its oriented margin is
    above ``-strict``; ``|margin| < eq`` counts as equality (and, for strict
    statements, as a boundary case needing human review).
    """

    strict: float = 1e-9
    eq: float = 1e-7
    majorization: float = 1e-9


TOL = Tolerances()

# isomorphism backtracking cap; larger graphs fall back to hash-only dedup
ISO_CAP = 12

WORKERS_ENV = "KYFANLI_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class RunConfig:
    command: str = ""
    strict_tol: float = TOL.strict
    eq_tol: float = TOL.eq
    workers: int = field(default_factory=default_workers)
    output: str | None = None
    fmt: str = "json"
    max_graphs: int | None = None
    max_seconds: float | None = None
    seed: int = 0
    iso_cap: int = ISO_CAP

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.strict_tol <= 0 or self.eq_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown output format {self.fmt!r}")

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(strict=self.strict_tol, eq=self.eq_tol)

    def header(self) -> dict:
        """Config fields that belong in a report header (no output path)."""
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "output"}


_CASTS = {
    "strict_tol": float,
    "eq_tol": float,
    "workers": int,
    "max_graphs": int,
    "max_seconds": float,
    "seed": int,
    "iso_cap": int,
    "output": str,
    "fmt": str,
}


_ALIASES = {"format": "fmt", "budget": "max_graphs"}


def read_config_file(path: str | Path) -> dict:
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = _ALIASES.get(key.replace("-", "_"), key.replace("-", "_"))
        if key not in _CASTS:
            raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _CASTS[key](value)
    return values


def merge(base: RunConfig, file_values: dict, flag_values: dict) -> RunConfig:
    """File values override defaults; explicit flags override both."""
    merged = dict(file_values)
    merged.update({k: v for k, v in flag_values.items() if v is not None})
    return replace(base, **merged)
