"""Shared physical constants, units and geometry/material value types.

Conventions used throughout the package:

- all lengths are metres, densities kg/m^3, masses kg, forces newtons;
- attractive forces are negative;
- an infinitely thick layer is represented by IEEE +inf (``INFINITE``), so
  factors of the form (1 - e^(-D/lambda)) evaluate to exactly 1.0 with no
  rounding.

Every type here is an immutable (frozen) dataclass and can be shared freely
between worker processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Distinguished "infinitely thick" value. exp(-INFINITE / x) == 0.0 exactly
#: for any finite x > 0, which is why this is +inf and not a large number.
INFINITE: float = math.inf

#: CODATA 2018 gravitational constant, m^3 kg^-1 s^-2.
G_DEFAULT: float = 6.67430e-11


class InputError(ValueError):
    """Invalid physical input (non-positive length, bad unit, bad config)."""


class DegenerateInputError(InputError):
    """Inputs that make the requested quantity undefined (e.g. all-zero forces)."""


class PoleProximityError(InputError):
    """Power-law exponent too close to an integrable pole (N = 1 or N = 3).

    The generic closed form suffers 0/0 cancellation there; callers must use
    the exact special-case values N = 1.0 or N = 3.0 instead.
    """


@dataclass(frozen=True)
class PhysicalConstants:
    """Physical constants; only G is needed by this package."""

    G: float = G_DEFAULT

    def __post_init__(self):
        if not self.G > 0.0:
            raise InputError(f"G must be > 0, got {self.G}")


@dataclass(frozen=True)
class YukawaParams:
    """Yukawa coupling relative to gravity: strength alpha, range lam (m).

    alpha may be any real (limits constrain |alpha|); lam must be > 0.
    """

    alpha: float
    lam: float

    def __post_init__(self):
        if not self.lam > 0.0:
            raise InputError(f"Yukawa range must be > 0, got {self.lam}")


@dataclass(frozen=True)
class Layer:
    """One homogeneous coating: thickness (m) and density (kg/m^3).

    thickness == 0 means the layer is absent.
    """

    thickness: float
    density: float

    def __post_init__(self):
        if self.thickness < 0.0:
            raise InputError(f"layer thickness must be >= 0, got {self.thickness}")
        if self.density < 0.0:
            raise InputError(f"layer density must be >= 0, got {self.density}")


#: Absent layer, used when a body has fewer than two coatings.
NO_LAYER = Layer(0.0, 0.0)


@dataclass(frozen=True)
class LayeredSlab:
    """Slab made of a base plus up to two coatings, listed bottom-up.

    ``top`` is the layer facing the sphere.
    """

    base: Layer
    middle: Layer = NO_LAYER
    top: Layer = NO_LAYER

    def __post_init__(self):
        if not self.base.thickness > 0.0:
            raise InputError("slab base thickness must be > 0")


@dataclass(frozen=True)
class LayeredSphere:
    """Sphere with a homogeneous core and up to two concentric coatings."""

    core_radius: float
    core_density: float
    inner_coat: Layer = NO_LAYER
    outer_coat: Layer = NO_LAYER

    def __post_init__(self):
        if not self.core_radius > 0.0:
            raise InputError(f"core radius must be > 0, got {self.core_radius}")
        if self.core_density < 0.0:
            raise InputError(f"core density must be >= 0, got {self.core_density}")

    @property
    def outer_radius(self) -> float:
        return self.core_radius + self.inner_coat.thickness + self.outer_coat.thickness


@dataclass(frozen=True)
class CurvatureRadii:
    """Principal curvature radii of a (possibly aspherical) surface."""

    r_x: float
    r_y: float

    def __post_init__(self):
        if not (self.r_x > 0.0 and self.r_y > 0.0):
            raise InputError(f"curvature radii must be > 0, got {self.r_x}, {self.r_y}")


@dataclass(frozen=True)
class Disk:
    """Finite disk: radius (may be INFINITE), thickness, density.

    The quadrature oracle requires a finite radius; closed forms accept
    INFINITE where the limit is well defined.
    """

    radius: float
    thickness: float
    density: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise InputError(f"disk radius must be > 0, got {self.radius}")
        if not self.thickness > 0.0:
            raise InputError(f"disk thickness must be > 0, got {self.thickness}")
        if self.density < 0.0:
            raise InputError(f"disk density must be >= 0, got {self.density}")


@dataclass(frozen=True)
class PowerLawParams:
    """Power-law point force F = -K rho1 m2 / r^n.

    The units of the coupling ``k`` depend on the exponent ``n``. Evaluation
    routes through dedicated closed forms at exactly n = 1 and n = 3.
    """

    k: float
    n: float

    def __post_init__(self):
        if not self.n > 0.0:
            raise InputError(f"power-law exponent must be > 0, got {self.n}")


@dataclass(frozen=True)
class ResonatorParams:
    """Mechanical resonator used in frequency-shift force measurements."""

    mass: float
    curvature: CurvatureRadii

    def __post_init__(self):
        if not self.mass > 0.0:
            raise InputError(f"resonator mass must be > 0, got {self.mass}")


def to_si_density(value: float, unit: str) -> float:
    """Convert a density to kg/m^3. ``unit`` is 'g_per_cm3' or 'kg_per_m3'."""
    if value < 0.0:
        raise InputError(f"density must be >= 0, got {value}")
    if unit == "g_per_cm3":
        return value * 1000.0
    if unit == "kg_per_m3":
        return float(value)
    raise InputError(f"unknown density unit {unit!r}")


def effective_radius(c: CurvatureRadii) -> float:
    """Geometric mean sqrt(r_x * r_y) of the principal curvature radii."""
    return math.sqrt(c.r_x * c.r_y)
