"""Synthetic data generation and result scoring.

Generators draw class-conditional samples around angular centers with
wrapped-normal noise; scoring covers partition agreement (adjusted Rand
index) and dendrogram similarity (cophenetic correlation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clustering import Dendrogram, Labeling
from .geometry import PolarPoint, normalize_angle
from .metrics import DistanceMatrix

# A cophenetic matrix is a condensed matrix of first-join merge heights.
CopheneticMatrix = DistanceMatrix


class UndefinedCorrelationError(ValueError):
    """Raised when a cophenetic matrix has zero variance (flat tree)."""


@dataclass(frozen=True)
class SyntheticSpec:
    """Recipe for a seeded class-labeled polar dataset."""

    n_points: int
    n_classes: int
    class_centers: tuple[float, ...]
    angular_spread: float
    radial_spread: float = 0.0
    base_radius: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_points < 1 or not 1 <= self.n_classes <= self.n_points:
            raise ValueError(
                f"need 1 <= n_classes <= n_points, got {self.n_classes}, {self.n_points}"
            )
        if len(self.class_centers) != self.n_classes:
            raise ValueError(
                f"{self.n_classes} classes need {self.n_classes} centers, "
                f"got {len(self.class_centers)}"
            )
        if not self.angular_spread >= 0.0 or not self.radial_spread >= 0.0:
            raise ValueError("spreads must be >= 0")
        if not self.base_radius > 0.0:
            raise ValueError("base_radius must be > 0")


def generate_synthetic(spec: SyntheticSpec) -> tuple[list[PolarPoint], Labeling]:
    """Draw points class by class; byte-reproducible for a fixed seed.

    Angular noise is normal around the class center and wrapped onto
    [0, 2*pi); radial noise is normal around base_radius, floored at 0.
    Class sizes differ by at most one, with earlier classes taking the
    remainder.
    """
    rng = np.random.default_rng(spec.seed & 0xFFFFFFFFFFFFFFFF)
    base, extra = divmod(spec.n_points, spec.n_classes)
    points: list[PolarPoint] = []
    labels: Labeling = []
    for cls, center in enumerate(spec.class_centers):
        size = base + (1 if cls < extra else 0)
        thetas = center + rng.normal(0.0, spec.angular_spread, size)
        radii = spec.base_radius + rng.normal(0.0, spec.radial_spread, size)
        for theta, r in zip(thetas, radii):
            points.append(PolarPoint(max(0.0, float(r)), normalize_angle(float(theta))))
            labels.append(cls)
    return points, labels


def adjusted_rand_index(a: Labeling, b: Labeling) -> float:
    """Chance-corrected pair-counting agreement between two partitions.

    Outliers (-1) are treated as singleton classes on each side, so noise
    assignments are penalized like any other disagreement instead of
    being matched up by some ad hoc rule.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    n = len(a)
    if n == 0:
        raise ValueError("labelings must be non-empty")

    def singletonize(labels: Labeling) -> list[int]:
        out = []
        fresh = max((lab for lab in labels if lab != -1), default=-1)
        for lab in labels:
            if lab == -1:
                fresh += 1
                out.append(fresh)
            else:
                out.append(lab)
        return out

    a = singletonize(a)
    b = singletonize(b)
    contingency: dict[tuple[int, int], int] = {}
    row_sum: dict[int, int] = {}
    col_sum: dict[int, int] = {}
    for x, y in zip(a, b):
        contingency[(x, y)] = contingency.get((x, y), 0) + 1
        row_sum[x] = row_sum.get(x, 0) + 1
        col_sum[y] = col_sum.get(y, 0) + 1

    def comb2(m: int) -> int:
        return m * (m - 1) // 2

    index = sum(comb2(v) for v in contingency.values())
    sum_rows = sum(comb2(v) for v in row_sum.values())
    sum_cols = sum(comb2(v) for v in col_sum.values())
    total = comb2(n)
    expected = sum_rows * sum_cols / total if total else 0.0
    max_index = (sum_rows + sum_cols) / 2.0
    if max_index == expected:  # both partitions fully determined (e.g. all singletons)
        return 1.0
    return (index - expected) / (max_index - expected)


def cophenetic_matrix(d: Dendrogram) -> CopheneticMatrix:
    """Condensed matrix of the heights at which leaf pairs first join."""
    n = d.n_leaves
    square = np.zeros((n, n))
    members: dict[int, list[int]] = {i: [i] for i in range(n)}
    for m in d.merges:
        left = members.pop(m.node_a)
        right = members.pop(m.node_b)
        for i in left:
            for j in right:
                square[i, j] = m.height
                square[j, i] = m.height
        members[m.new_id] = left + right
    return DistanceMatrix.from_square(square)


def cophenetic_correlation(a: Dendrogram, b: Dendrogram) -> float:
    """Pearson correlation between two trees' cophenetic matrices."""
    if a.n_leaves != b.n_leaves:
        raise ValueError(f"leaf count mismatch: {a.n_leaves} vs {b.n_leaves}")
    va = cophenetic_matrix(a).values
    vb = cophenetic_matrix(b).values
    da = va - va.mean()
    db = vb - vb.mean()
    denom = math.sqrt(float((da**2).sum()) * float((db**2).sum()))
    if denom == 0.0:
        raise UndefinedCorrelationError(
            "cophenetic correlation is undefined when a tree has constant merge heights"
        )
    return float((da * db).sum() / denom)
