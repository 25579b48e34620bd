"""Period-repetition searches that make planar clusterers circularity-aware.

Replicating the base period c extra times turns wrap-around neighborhoods
into contiguous ones, after which an ordinary planar clusterer can run on
the extended plane.  Each search then maps the extended result back onto
the original points:

* K-means: cluster the extended plane into (c+1)*K groups, look at the
  middle period, and pick the K of its groups whose members project onto
  the original indices exactly once each.
* DBSCAN: cluster the extended plane with unchanged parameters and keep
  the group patterns that recur in at least Y of the periods.
* Hierarchical: take, for every original pair, the minimum distance over
  all replicated-copy pairs, and build the dendrogram from that matrix.
"""

from __future__ import annotations

import dataclasses
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .clustering import (
    DbscanConfig,
    Dendrogram,
    KMeansConfig,
    Labeling,
    dbscan,
    hierarchical,
    kmeans,
)
from .geometry import PolarPoint, ReconstructionParams, reconstruct, replicate
from .metrics import DistanceMatrix

# Ceiling for the K-means retry loop: repetitions grow 2 at a time up to
# this value, after which the search reports failure instead of spinning.
MAX_KMEANS_REPETITIONS = 10


class NoValidCombinationError(RuntimeError):
    """No middle-period cluster subset projected onto a clean partition."""

    def __init__(self, k: int, tried: list[int], middle_label_counts: list[int]):
        self.k = k
        self.tried = tried
        self.middle_label_counts = middle_label_counts
        super().__init__(
            f"no combination of {k} extended clusters partitions the original "
            f"points; tried repetitions {tried} with "
            f"{middle_label_counts} middle-period cluster labels"
        )


@dataclass
class CircularKMeansResult:
    labels: Labeling
    chosen_period: int  # 1-based position of the middle period
    chosen_combination: tuple[int, ...]  # extended-cluster ids, ascending
    c_used: int


@dataclass
class CircularDbscanResult:
    labels: Labeling
    retained_patterns: list[tuple[frozenset[int], int]] = field(repr=False)
    threshold_used: int = 0


def _extended_plane(points: list[PolarPoint], params: ReconstructionParams):
    """Replicate reconstructed points; returns (coords, origins, periods)."""
    base = [reconstruct(p, params) for p in points]
    copies = replicate(base, params)
    coords = np.array([(c.point.x_prime, c.point.y_prime) for c in copies])
    origins = np.array([c.origin for c in copies])
    periods = np.array([c.period for c in copies])
    return coords, origins, periods


def _first_valid_combination(
    candidate_labels: list[int],
    projections: dict[int, Counter],
    k: int,
    n_points: int,
) -> tuple[int, ...] | None:
    """First K-subset (lexicographic) whose projections cover each point once.

    Depth-first over sorted candidate ids; a branch is pruned as soon as
    the partial union repeats an original index, which cannot be undone by
    adding further clusters.
    """
    chosen: list[int] = []

    def extend(start: int, covered: Counter) -> tuple[int, ...] | None:
        if len(chosen) == k:
            if len(covered) == n_points:  # counts are all 1 by construction
                return tuple(chosen)
            return None
        for idx in range(start, len(candidate_labels)):
            if len(candidate_labels) - idx < k - len(chosen):
                break
            label = candidate_labels[idx]
            proj = projections[label]
            if any(covered[i] for i in proj) or any(c > 1 for c in proj.values()):
                continue
            chosen.append(label)
            result = extend(idx + 1, covered + proj)
            if result is not None:
                return result
            chosen.pop()
        return None

    return extend(0, Counter())


def _labels_from_partition(groups: list[frozenset[int]], n: int) -> Labeling:
    """Label groups 0..K-1 in order of their smallest member index."""
    labels = [-1] * n
    for lab, group in enumerate(sorted(groups, key=min)):
        for i in group:
            labels[i] = lab
    return labels


def circular_kmeans(
    points: list[PolarPoint],
    k: int,
    params: ReconstructionParams,
    cfg: KMeansConfig | None = None,
    max_repetitions: int = MAX_KMEANS_REPETITIONS,
) -> CircularKMeansResult:
    """K-means on the replicated plane, decoded via the middle period.

    ``params.repetitions`` must be even (c = 2n) so the middle period has
    the same number of neighbors on both sides.  The extended plane is
    clustered into (c+1)*K groups; subsets of size K of the groups present
    in the middle period are enumerated in lexicographic order of their
    ids and the first subset whose members project onto every original
    point exactly once wins.  If none exists, c is raised by 2 and the
    whole procedure retries up to ``max_repetitions``.

    ``cfg`` supplies max_iter / n_restarts / seed for the planar runs; its
    own k field is ignored in favor of the extended cluster count.
    """
    n = len(points)
    if n == 0:
        raise ValueError("points must be non-empty")
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    c = params.repetitions
    if c < 2 or c % 2 != 0:
        raise ValueError(f"repetitions must be even and >= 2 for the K-means search, got {c}")
    if cfg is None:
        cfg = KMeansConfig(k=k)

    tried: list[int] = []
    middle_counts: list[int] = []
    while c <= max_repetitions:
        run_params = dataclasses.replace(params, repetitions=c)
        coords, origins, periods = _extended_plane(points, run_params)
        run_cfg = dataclasses.replace(cfg, k=(c + 1) * k)
        ext_labels_list, _, _ = kmeans(coords, run_cfg)
        ext_labels = np.array(ext_labels_list)

        middle = c // 2
        middle_label_ids = sorted(set(ext_labels[periods == middle].tolist()))
        projections = {
            lab: Counter(origins[ext_labels == lab].tolist()) for lab in middle_label_ids
        }
        combo = _first_valid_combination(middle_label_ids, projections, k, n)
        tried.append(c)
        middle_counts.append(len(middle_label_ids))
        if combo is not None:
            groups = [frozenset(projections[lab].keys()) for lab in combo]
            return CircularKMeansResult(
                labels=_labels_from_partition(groups, n),
                chosen_period=middle + 1,
                chosen_combination=combo,
                c_used=c,
            )
        c += 2
    raise NoValidCombinationError(k, tried, middle_counts)


def circular_dbscan(
    points: list[PolarPoint],
    cfg: DbscanConfig,
    params: ReconstructionParams,
    threshold: int | None = None,
) -> CircularDbscanResult:
    """DBSCAN on the replicated plane, keeping patterns that recur enough.

    Every extended cluster is projected to the set of original indices of
    its members; a pattern's repetition count is the number of distinct
    periods in which some cluster carries it.  Patterns with count >= Y
    become classes (Y defaults to c+1, every period); everything else is
    noise.  Counting periods rather than clusters keeps patterns that
    straddle a period boundary, whose clusters each span two periods, on
    the same footing as interior ones.
    """
    n = len(points)
    if n == 0:
        raise ValueError("points must be non-empty")
    c = params.repetitions
    if c < 1:
        raise ValueError(f"repetitions must be >= 1, got {c}")
    y = c + 1 if threshold is None else threshold
    if not 1 <= y <= c + 1:
        raise ValueError(f"threshold must be in [1, {c + 1}], got {y}")

    coords, origins, periods = _extended_plane(points, params)
    ext_labels = np.array(dbscan(coords, cfg))

    pattern_periods: dict[frozenset[int], set[int]] = {}
    for lab in sorted(set(ext_labels.tolist()) - {-1}):
        members = ext_labels == lab
        pattern = frozenset(origins[members].tolist())
        pattern_periods.setdefault(pattern, set()).update(periods[members].tolist())

    candidates = sorted(
        (
            (pattern, len(touched))
            for pattern, touched in pattern_periods.items()
            if len(touched) >= y
        ),
        key=lambda item: (-item[1], sorted(item[0])),
    )
    labels = [-1] * n
    retained: list[tuple[frozenset[int], int]] = []
    claimed: set[int] = set()
    for pattern, count in candidates:
        if pattern & claimed:  # overlapping weaker pattern loses
            continue
        retained.append((pattern, count))
        claimed |= pattern
    retained.sort(key=lambda item: min(item[0]))
    for lab, (pattern, _) in enumerate(retained):
        for i in pattern:
            labels[i] = lab
    return CircularDbscanResult(labels=labels, retained_patterns=retained, threshold_used=y)


def circular_pairwise_min(
    points: list[PolarPoint], params: ReconstructionParams
) -> DistanceMatrix:
    """Pairwise distances as minima over replicated-copy pairs.

    This is the tile-and-minimize route: lay out all copies on the
    extended plane, measure plain Euclidean distances, and keep the
    smallest one for each original pair.
    """
    n = len(points)
    if n < 2:
        raise ValueError(f"need at least 2 points, got {n}")
    if params.repetitions < 1:
        raise ValueError(f"repetitions must be >= 1, got {params.repetitions}")
    coords, _, _ = _extended_plane(points, params)
    m = params.n_periods
    diff = coords[:, None, :] - coords[None, :, :]
    full = np.sqrt((diff**2).sum(axis=2))
    # Copies are period-major, so axis layout (period, origin) x (period, origin)
    # lets the per-pair minimum reduce over both period axes.
    per_pair = full.reshape(m, n, m, n).min(axis=(0, 2))
    return DistanceMatrix.from_square(per_pair)


def circular_hierarchical(
    points: list[PolarPoint],
    params: ReconstructionParams,
    linkage: str = "single",
) -> Dendrogram:
    """Agglomerative clustering on replicated-copy minimum distances."""
    return hierarchical(circular_pairwise_min(points, params), linkage)
