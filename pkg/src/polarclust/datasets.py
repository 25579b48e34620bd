"""Bundled fixtures: the seven-point example, seeded synthetic recipes,
and the beta-globin FASTA file.

The seven-point set is built around two low-radius probes at opposite
phase, (0.2, pi/2) and (0.2, 3*pi/2).  In Cartesian coordinates those two
sit only 0.4 apart near the origin, so planar K-means pulls the first one
away from its high-radius companions and planar DBSCAN glues the second
one to the wrong arc.  On the unrolled cylinder both land with their own
angular group.  The five companions were placed so that, at base radius
1: each upper-arc point has a geodesic neighbor within 0.5 while the
lower-arc points are pairwise more than 0.5 apart yet chain within 1.5,
and the two arcs stay more than 1.5 apart.
"""

from __future__ import annotations

import math
from importlib import resources

from .analysis import SyntheticSpec
from .clustering import Labeling
from .geometry import PolarPoint

_PI = math.pi


def seven_point_example() -> tuple[list[PolarPoint], Labeling]:
    """The frozen seven-point fixture and its reference partition."""
    points = [
        PolarPoint(0.20, _PI / 2),           # low-radius probe, upper arc
        PolarPoint(0.65, _PI / 2),
        PolarPoint(1.10, _PI / 2 - 0.08),
        PolarPoint(1.10, _PI / 2 + 0.36),
        PolarPoint(0.20, 3 * _PI / 2),       # low-radius probe, lower arc
        PolarPoint(0.75, 3 * _PI / 2 - 0.25),
        PolarPoint(0.70, 3 * _PI / 2 + 0.85),
    ]
    labels = [0, 0, 0, 0, 1, 1, 1]
    return points, labels


def two_class_spec(seed: int = 828) -> SyntheticSpec:
    """Fifty unit-circle points in two angular classes.

    Centers sit 3.0 radians apart, twelve times the angular spread, so
    the classes are unambiguous for any method that respects the wrap.
    """
    return SyntheticSpec(
        n_points=50,
        n_classes=2,
        class_centers=(1.0, 4.0),
        angular_spread=0.25,
        radial_spread=0.05,
        base_radius=1.0,
        seed=seed,
    )


def five_class_spec(seed: int = 515) -> SyntheticSpec:
    """Fifty unit-circle points in five classes of ten.

    One center sits at angle 0 so a class straddles the period seam.
    """
    step = 2 * _PI / 5
    return SyntheticSpec(
        n_points=50,
        n_classes=5,
        class_centers=(0.0, step, 2 * step, 3 * step, 4 * step),
        angular_spread=0.12,
        radial_spread=0.03,
        base_radius=1.0,
        seed=seed,
    )


def beta_globin_fasta() -> str:
    """Text of the bundled beta-globin first-exon FASTA file."""
    return (
        resources.files("polarclust.data")
        .joinpath("beta_globin_exon1.fasta")
        .read_text(encoding="ascii")
    )
