"""Coupling-strength exclusion limits from per-separation force residuals.

An experiment bounds any extra force at each probed separation by the
residual of its theory-experiment comparison. Since the Yukawa force is
linear in alpha, the strongest claimable limit at a given range lambda is

    alpha_bound(lambda) = min over separations of residual(a) / |F(a; alpha=1, lambda)|,

under whichever force model (parallel-plate-mapped 'pfa' or exact surface-
element 'epfa') the analysis adopts. The model choice shifts the whole
curve by the separation-independent factor 1/eta (homogeneous) or
1/eta_delta (layered): overestimating the force claims stronger limits.

Residuals are taken as given; no interpolation between tabulated
separations and no statistical machinery. The bundled
data/synthetic_residuals.csv is synthetic demo data, not digitized
measurements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .core import INFINITE, DegenerateInputError, InputError, PhysicalConstants, YukawaParams
from .layered import LayeredConfig, eta_delta, layered_epfa_force, layered_pfa_force
from .sweeps import SweepGrid
from .yukawa import SphereSlabConfig, eta, sphere_slab_force_exact, sphere_slab_force_pfa

#: Above roughly this Yukawa range the parallel-plate-mapped model deviates
#: appreciably from the exact force; sweep manifests flag these rows.
PFA_RELIABLE_LAMBDA_MAX = 100e-9

METHODS = ("pfa", "epfa")


@dataclass(frozen=True)
class ResidualBound:
    """Experimental residual-force bound per separation, strictly increasing."""

    entries: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.entries:
            raise InputError("residual bound needs at least one entry")
        previous = 0.0
        for separation, residual in self.entries:
            if not separation > previous:
                raise InputError("separations must be positive and strictly increasing")
            if residual < 0.0:
                raise InputError(f"residual must be >= 0, got {residual}")
            previous = separation

    @classmethod
    def from_csv(cls, path: str) -> "ResidualBound":
        """Read `separation_m,residual_N` rows; errors name the offending line."""
        entries = []
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.read().splitlines()
        if not lines:
            raise InputError(f"{path}: empty residual file")
        if lines[0].strip() != "separation_m,residual_N":
            raise InputError(f"{path}:1: header must be 'separation_m,residual_N'")
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise InputError(f"{path}:{lineno}: expected two comma-separated fields")
            try:
                entries.append((float(parts[0]), float(parts[1])))
            except ValueError:
                raise InputError(f"{path}:{lineno}: cannot parse {line!r}") from None
        if not entries:
            raise InputError(f"{path}: no data rows")
        try:
            return cls(entries=tuple(entries))
        except InputError as exc:
            raise InputError(f"{path}: {exc}") from None


@dataclass(frozen=True)
class ExclusionPoint:
    """Largest |alpha| compatible with the residuals at one lambda."""

    lam: float
    alpha_bound: float
    best_separation: float
    method: str


def _unit_alpha_force(separation: float, lam: float, geometry, method: str,
                      c: PhysicalConstants, d2: float) -> float:
    params = YukawaParams(alpha=1.0, lam=lam)
    cfg = replace(geometry, separation=separation)
    if isinstance(geometry, LayeredConfig):
        if method == "pfa":
            return layered_pfa_force(cfg, params, c)
        return layered_epfa_force(cfg, params, c)
    if isinstance(geometry, SphereSlabConfig):
        if method == "pfa":
            return sphere_slab_force_pfa(cfg, d2, params, c)
        return sphere_slab_force_exact(cfg, params, c)
    raise InputError(f"unsupported geometry {type(geometry).__name__}")


def alpha_limit(lam: float, bounds: ResidualBound, geometry, method: str,
                c: PhysicalConstants = PhysicalConstants(),
                d2: float = INFINITE) -> ExclusionPoint:
    """Best alpha bound over all tabulated separations at one lambda.

    Separations whose unit-alpha force underflows to zero cannot constrain
    alpha and are skipped; if none constrains it the input is degenerate.
    ``d2`` is only used for the pfa method on homogeneous geometry (a
    LayeredConfig carries its own).
    """
    if method not in METHODS:
        raise InputError(f"method must be one of {METHODS}, got {method!r}")
    if not lam > 0.0:
        raise InputError(f"lambda must be > 0, got {lam}")
    best: tuple[float, float] | None = None
    for separation, residual in bounds.entries:
        force = abs(_unit_alpha_force(separation, lam, geometry, method, c, d2))
        if force == 0.0 or math.isnan(force):
            continue
        bound = residual / force
        if best is None or bound < best[0]:
            best = (bound, separation)
    if best is None:
        raise DegenerateInputError(
            "no separation yields a nonzero unit-alpha force (zero densities "
            "or lambda far below every separation)")
    return ExclusionPoint(lam=lam, alpha_bound=best[0], best_separation=best[1],
                          method=method)


def exclusion_curve(lambda_grid: SweepGrid, bounds: ResidualBound, geometry,
                    method: str, c: PhysicalConstants = PhysicalConstants(),
                    d2: float = INFINITE) -> list[ExclusionPoint]:
    """alpha_limit mapped over the lambda grid, in grid order."""
    return [alpha_limit(lam, bounds, geometry, method, c, d2)
            for lam in lambda_grid.values()]


def limit_shift(lam: float, geometry, d2: float = INFINITE,
                c: PhysicalConstants = PhysicalConstants()) -> float:
    """Factor by which the exact-force analysis weakens the pfa-claimed bound.

    alpha_epfa / alpha_pfa = F_pfa / F_epfa = 1/eta (homogeneous geometry)
    or 1/eta_delta (layered); separation-independent. Equals e^2/2 at
    lambda = R for a homogeneous sphere over a half-space.
    """
    if isinstance(geometry, LayeredConfig):
        cfg = geometry if geometry.d2 == d2 else replace(geometry, d2=d2)
        return 1.0 / eta_delta(cfg, YukawaParams(alpha=1.0, lam=lam), c).eta_delta
    if isinstance(geometry, SphereSlabConfig):
        return 1.0 / eta(geometry.sphere_radius, d2, lam).eta
    raise InputError(f"unsupported geometry {type(geometry).__name__}")
