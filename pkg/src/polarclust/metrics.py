"""Distance functions and condensed pairwise matrices.

The geodesic between two points on the cylinder surface reduces, after
unrolling, to the Euclidean distance between their plane images with the
angular gap taken the short way around.  That closed form is used here;
the literal tile-and-minimize route exists only as a test oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import TWO_PI, PolarPoint


def manhattan_distance(a, b) -> float:
    """Sum of absolute coordinate differences (L1)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return float(np.abs(a - b).sum())


def euclidean_distance(a, b) -> float:
    """Square root of the sum of squared coordinate differences (L2)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(((a - b) ** 2).sum()))


def circular_distance(p: PolarPoint, q: PolarPoint, base_radius: float) -> float:
    """Geodesic on the unrolled cylinder: shortest arc in x', radial gap in y'."""
    if base_radius <= 0.0:
        raise ValueError(f"base_radius must be > 0, got {base_radius!r}")
    gap = abs(p.theta - q.theta)
    arc = min(gap, TWO_PI - gap)
    return math.hypot(base_radius * arc, p.r - q.r)


def condensed_index(n: int, i: int, j: int) -> int:
    """Position of pair (i, j), i < j, in a condensed upper-triangular layout."""
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"invalid pair ({i}, {j}) for n={n}")
    if i > j:
        i, j = j, i
    return n * i - (i * (i + 1)) // 2 + (j - i - 1)


@dataclass
class DistanceMatrix:
    """Pairwise distances in condensed upper-triangular form."""

    n: int
    values: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=float)
        expected = self.n * (self.n - 1) // 2
        if self.n < 2 or self.values.shape != (expected,):
            raise ValueError(
                f"need n >= 2 and {expected} condensed entries, got n={self.n}, "
                f"shape {self.values.shape}"
            )
        if not np.all(np.isfinite(self.values)) or np.any(self.values < 0.0):
            raise ValueError("distances must be finite and >= 0")

    def get(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        return float(self.values[condensed_index(self.n, i, j)])

    def to_square(self) -> np.ndarray:
        square = np.zeros((self.n, self.n))
        iu, ju = np.triu_indices(self.n, k=1)
        square[iu, ju] = self.values
        square[ju, iu] = self.values
        return square

    @classmethod
    def from_square(cls, square: np.ndarray) -> "DistanceMatrix":
        square = np.asarray(square, dtype=float)
        n = square.shape[0]
        iu, ju = np.triu_indices(n, k=1)
        return cls(n, square[iu, ju])


def pairwise_circular(points: list[PolarPoint], base_radius: float) -> DistanceMatrix:
    """Condensed matrix of circular distances between all point pairs."""
    n = len(points)
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    theta = np.array([p.theta for p in points])
    r = np.array([p.r for p in points])
    iu, ju = np.triu_indices(n, k=1)
    gap = np.abs(theta[iu] - theta[ju])
    arc = np.minimum(gap, TWO_PI - gap)
    values = np.hypot(base_radius * arc, r[iu] - r[ju])
    return DistanceMatrix(n, values)
