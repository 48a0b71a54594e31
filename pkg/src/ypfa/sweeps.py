"""Grids, worker-pool evaluation and deterministic CSV emission.

CSV format: UTF-8, mandatory header, LF line endings, scientific notation
with 12 significant digits, locale-independent. Sweep rows are computed
independently (optionally by a process pool) and always assembled in grid
order, so the output bytes do not depend on the worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import InputError

WORKERS_ENV_VAR = "YPFA_WORKERS"


@dataclass(frozen=True)
class SweepGrid:
    """Deterministic 1D parameter grid, log- or linearly spaced."""

    min: float
    max: float
    points: int
    spacing: str = "log"

    def __post_init__(self):
        if self.points < 1:
            raise InputError(f"grid needs at least one point, got {self.points}")
        if self.points > 1 and not self.min < self.max:
            raise InputError(f"grid needs min < max, got [{self.min}, {self.max}]")
        if self.spacing not in ("log", "linear"):
            raise InputError(f"spacing must be 'log' or 'linear', got {self.spacing!r}")
        if self.spacing == "log" and not self.min > 0.0:
            raise InputError("log spacing requires min > 0")

    def values(self) -> list[float]:
        if self.points == 1:
            return [self.min]
        n = self.points - 1
        if self.spacing == "log":
            ratio = self.max / self.min
            return [self.min * ratio ** (i / n) for i in range(self.points)]
        step = (self.max - self.min) / n
        return [self.min + i * step for i in range(self.points)]


def resolve_workers(requested: int | None) -> int:
    """Worker count: explicit flag, else YPFA_WORKERS, else 1."""
    if requested is not None:
        value = requested
    else:
        env = os.environ.get(WORKERS_ENV_VAR)
        if env is None:
            return 1
        try:
            value = int(env)
        except ValueError:
            raise InputError(f"{WORKERS_ENV_VAR} must be an integer, got {env!r}") from None
    if value < 1:
        raise InputError(f"worker count must be >= 1, got {value}")
    return value


def map_ordered(func: Callable, items: Sequence, workers: int) -> list:
    """Apply func to items, preserving input order regardless of workers."""
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunk = max(1, len(items) // (workers * 4))
        return list(pool.map(func, items, chunksize=chunk))


def format_number(x: float) -> str:
    """Scientific notation, 12 significant digits; inf/nan spelled out."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.11e}"


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> int:
    """Write rows (numbers or strings) as CSV; returns the row count."""
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(",".join(header) + "\n")
        for row in rows:
            cells = [cell if isinstance(cell, str) else format_number(cell) for cell in row]
            handle.write(",".join(cells) + "\n")
            count += 1
    return count
