"""Coordinate types and the polar -> cylinder -> unrolled-plane mapping.

A point (r, theta) is placed on the lateral surface of a cylinder whose
base circle has radius ``base_radius``; the surface is then unrolled into
a rectangle where the horizontal coordinate is the arc length
``base_radius * theta`` and the vertical coordinate is ``r``.  The base
period of the rectangle spans ``[0, 2*pi*base_radius)`` and can be tiled
with additional copies so that wrap-around neighborhoods become
contiguous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

TWO_PI = 2.0 * math.pi

# Absolute tolerance for angle comparisons after normalization.
ANGLE_TOL = 1e-9


def normalize_angle(theta: float) -> float:
    """Wrap an angle in radians onto [0, 2*pi) with floored modulo."""
    if not math.isfinite(theta):
        raise ValueError(f"angle must be finite, got {theta!r}")
    wrapped = math.fmod(theta, TWO_PI)
    if wrapped < 0.0:
        wrapped += TWO_PI
    if wrapped >= TWO_PI:  # fmod rounding can land exactly on 2*pi
        wrapped = 0.0
    return wrapped


@dataclass(frozen=True)
class PolarPoint:
    """A sample in polar coordinates; the angle is normalized on construction."""

    r: float
    theta: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.r) or self.r < 0.0:
            raise ValueError(f"radius must be finite and >= 0, got {self.r!r}")
        object.__setattr__(self, "theta", normalize_angle(self.theta))


@dataclass(frozen=True)
class CartesianPoint:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")


@dataclass(frozen=True)
class PlanePoint:
    """A point on the unrolled rectangular plane: (arc length, radius)."""

    x_prime: float
    y_prime: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x_prime) and math.isfinite(self.y_prime)):
            raise ValueError("coordinates must be finite")
        if self.y_prime < 0.0:
            raise ValueError(f"y' is a radius and must be >= 0, got {self.y_prime!r}")


@dataclass(frozen=True)
class ReconstructionParams:
    """Base-circle radius and number of extra period repetitions.

    ``base_radius`` weights angular differences against radial ones: a
    larger value makes a given angular gap count for more arc length.
    ``repetitions`` is the number of additional copies of the base period
    tiled to the right of the original one.
    """

    base_radius: float = 1.0
    repetitions: int = 0

    def __post_init__(self) -> None:
        if not math.isfinite(self.base_radius) or self.base_radius <= 0.0:
            raise ValueError(f"base_radius must be > 0, got {self.base_radius!r}")
        if self.repetitions < 0 or self.repetitions != int(self.repetitions):
            raise ValueError(f"repetitions must be a nonnegative integer, got {self.repetitions!r}")

    @property
    def period_width(self) -> float:
        """Width of one period of the unrolled plane (2*pi*base_radius)."""
        return TWO_PI * self.base_radius

    @property
    def n_periods(self) -> int:
        return self.repetitions + 1


class ReplicatedPoint(NamedTuple):
    """One copy of a plane point, tagged with its source and period."""

    point: PlanePoint
    origin: int
    period: int


def polar_to_cartesian(p: PolarPoint) -> CartesianPoint:
    """Convert (r, theta) to (r*cos(theta), r*sin(theta))."""
    return CartesianPoint(p.r * math.cos(p.theta), p.r * math.sin(p.theta))


def reconstruct(p: PolarPoint, params: ReconstructionParams) -> PlanePoint:
    """Map a polar point onto the unrolled plane: (R*theta, r)."""
    return PlanePoint(params.base_radius * p.theta, p.r)


def replicate(
    points: Sequence[PlanePoint], params: ReconstructionParams
) -> list[ReplicatedPoint]:
    """Tile plane points across ``repetitions + 1`` periods.

    Copy k of point i keeps y' and shifts x' by ``k * 2*pi*base_radius``.
    Output is period-major: all copies of period 0 first (in input order),
    then period 1, and so on.  Inputs must already lie in the base period.
    """
    width = params.period_width
    limit = width * (1.0 + 1e-12)
    for i, p in enumerate(points):
        if not (0.0 <= p.x_prime < limit):
            raise ValueError(
                f"point {i} has x'={p.x_prime!r}, outside the base period [0, {width!r})"
            )
    out: list[ReplicatedPoint] = []
    for k in range(params.n_periods):
        shift = k * width
        for i, p in enumerate(points):
            out.append(ReplicatedPoint(PlanePoint(p.x_prime + shift, p.y_prime), i, k))
    return out
