"""Planar clustering engines: Lloyd K-means, DBSCAN, agglomerative linkage.

These operate on plain 2-D points (or a precomputed distance matrix for
the hierarchical case) and know nothing about angular wrap-around; the
search layer handles circularity by feeding them replicated coordinates.
All three are deterministic: K-means via seeded restarts, DBSCAN via a
fixed scan order, linkage via a lexicographic tie-break.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .metrics import DistanceMatrix

Labeling = list[int]

LINKAGES = ("single", "complete", "average")


@dataclass(frozen=True)
class KMeansConfig:
    k: int
    max_iter: int = 300
    n_restarts: int = 16
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.max_iter < 1 or self.n_restarts < 1:
            raise ValueError("max_iter and n_restarts must be >= 1")


@dataclass(frozen=True)
class DbscanConfig:
    eps: float
    min_pts: int

    def __post_init__(self) -> None:
        if not self.eps > 0.0:
            raise ValueError(f"eps must be > 0, got {self.eps!r}")
        if self.min_pts < 1:
            raise ValueError(f"min_pts must be >= 1, got {self.min_pts}")


class Merge(NamedTuple):
    """One agglomeration step: children, linkage height, id of the new node."""

    node_a: int
    node_b: int
    height: float
    new_id: int


@dataclass
class Dendrogram:
    """Ordered merge list; leaves are 0..n-1, internal nodes n..2n-2."""

    n_leaves: int
    merges: list[Merge]

    def __post_init__(self) -> None:
        if self.n_leaves < 2 or len(self.merges) != self.n_leaves - 1:
            raise ValueError(
                f"{self.n_leaves} leaves require {self.n_leaves - 1} merges, "
                f"got {len(self.merges)}"
            )
        seen_children: set[int] = set()
        for step, m in enumerate(self.merges):
            if m.new_id != self.n_leaves + step:
                raise ValueError(f"merge {step} has new_id {m.new_id}")
            for child in (m.node_a, m.node_b):
                if child in seen_children or child >= m.new_id:
                    raise ValueError(f"node {child} is not a valid child at step {step}")
                seen_children.add(child)

    @property
    def heights(self) -> list[float]:
        return [m.height for m in self.merges]

    def leaf_sets(self) -> dict[int, frozenset[int]]:
        """Map every node id to the set of leaves below it."""
        sets: dict[int, frozenset[int]] = {i: frozenset([i]) for i in range(self.n_leaves)}
        for m in self.merges:
            sets[m.new_id] = sets[m.node_a] | sets[m.node_b]
        return sets


def _kmeans_pp_init(X: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    """k-means++ seeding: spread initial centroids by squared-distance sampling."""
    n = X.shape[0]
    centroids = np.empty((k, X.shape[1]))
    centroids[0] = X[int(rng.integers(n))]
    d2 = ((X - centroids[0]) ** 2).sum(axis=1)
    for j in range(1, k):
        total = d2.sum()
        if total > 0.0:
            idx = int(rng.choice(n, p=d2 / total))
        else:
            idx = int(rng.integers(n))  # duplicate-heavy input: any point works
        centroids[j] = X[idx]
        d2 = np.minimum(d2, ((X - centroids[j]) ** 2).sum(axis=1))
    return centroids


def _fill_empty_clusters(
    X: np.ndarray, labels: np.ndarray, centroids: np.ndarray, dist_to_own: np.ndarray
) -> None:
    """Re-seed each empty centroid at the point farthest from its current one.

    Repairs in ascending cluster-id order and never steals the last member
    of another cluster, so every cluster ends up non-empty.
    """
    k = centroids.shape[0]
    counts = np.bincount(labels, minlength=k)
    for j in range(k):
        if counts[j] > 0:
            continue
        eligible = counts[labels] > 1
        candidates = np.where(eligible, dist_to_own, -np.inf)
        i = int(np.argmax(candidates))
        counts[labels[i]] -= 1
        labels[i] = j
        counts[j] = 1
        centroids[j] = X[i]
        dist_to_own[i] = 0.0


def lloyd(
    X: np.ndarray, initial_centroids: np.ndarray, max_iter: int = 300
) -> tuple[np.ndarray, np.ndarray, list[float]]:
    """Run Lloyd iterations from given centroids.

    Returns (labels, centroids, sse_history) where the history holds the
    sum of squared distances after each assign+update iteration.
    """
    X = np.asarray(X, dtype=float)
    centroids = np.array(initial_centroids, dtype=float)
    labels = np.full(X.shape[0], -1, dtype=int)
    history: list[float] = []
    for _ in range(max_iter):
        sq = ((X[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
        new_labels = np.argmin(sq, axis=1)
        dist_to_own = np.sqrt(sq[np.arange(X.shape[0]), new_labels])
        _fill_empty_clusters(X, new_labels, centroids, dist_to_own)
        converged = bool(np.array_equal(new_labels, labels))
        labels = new_labels
        for j in range(centroids.shape[0]):
            members = X[labels == j]
            centroids[j] = members.mean(axis=0)
        sse = float(((X - centroids[labels]) ** 2).sum())
        history.append(sse)
        if converged:
            break
    return labels, centroids, history


def kmeans(points, cfg: KMeansConfig) -> tuple[Labeling, np.ndarray, float]:
    """Best-of-restarts Lloyd K-means with k-means++ seeding.

    Deterministic for a fixed config: restart r draws from a generator
    seeded with (cfg.seed, r), and ties between restarts go to the lower
    restart index.
    """
    X = np.asarray(points, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError("points must be a non-empty (n, d) array")
    if cfg.k > X.shape[0]:
        raise ValueError(f"k={cfg.k} exceeds the number of points ({X.shape[0]})")
    best: tuple[float, int] | None = None
    best_labels: np.ndarray | None = None
    best_centroids: np.ndarray | None = None
    seed_word = cfg.seed & 0xFFFFFFFFFFFFFFFF  # two's-complement view of negative seeds
    for restart in range(cfg.n_restarts):
        rng = np.random.default_rng([seed_word, restart])
        init = _kmeans_pp_init(X, cfg.k, rng)
        labels, centroids, history = lloyd(X, init, cfg.max_iter)
        key = (history[-1], restart)
        if best is None or key < best:
            best = key
            best_labels = labels
            best_centroids = centroids
    assert best is not None and best_labels is not None and best_centroids is not None
    return best_labels.tolist(), best_centroids, best[0]


def dbscan(points, cfg: DbscanConfig) -> Labeling:
    """Density clustering with noise; labels are 0..K-1 and -1 for noise.

    A point is core when its eps-neighborhood (itself included) holds at
    least min_pts points.  Points are scanned in ascending index order and
    each cluster is grown to completion before the scan moves on, so a
    border point reachable from several clusters always joins the first
    one that reaches it.
    """
    X = np.asarray(points, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError("points must be a non-empty (n, d) array")
    n = X.shape[0]
    sq = ((X[:, None, :] - X[None, :, :]) ** 2).sum(axis=2)
    adjacency = sq <= cfg.eps * cfg.eps
    neighbor_lists = [np.flatnonzero(adjacency[i]) for i in range(n)]
    is_core = np.array([len(nb) >= cfg.min_pts for nb in neighbor_lists])

    labels = [-1] * n
    expanded = [False] * n
    cluster_id = 0
    for i in range(n):
        if expanded[i] or not is_core[i]:
            continue
        labels[i] = cluster_id
        queue: deque[int] = deque(int(j) for j in neighbor_lists[i] if j != i)
        expanded[i] = True
        while queue:
            j = queue.popleft()
            if labels[j] == -1:
                labels[j] = cluster_id  # first cluster to reach j claims it
            if expanded[j] or not is_core[j]:
                expanded[j] = True
                continue
            expanded[j] = True
            queue.extend(int(m) for m in neighbor_lists[j] if not expanded[m] and m != j)
        cluster_id += 1
    return labels


def hierarchical(dm: DistanceMatrix, linkage: str = "single") -> Dendrogram:
    """Agglomerative clustering over a condensed distance matrix.

    At each step the active pair with the smallest linkage distance is
    merged; equal distances are broken by the lexicographically smallest
    (node_a, node_b) id pair.  Cluster-to-cluster distances follow the
    chosen linkage: minimum, maximum, or size-weighted average of member
    distances.
    """
    if linkage not in LINKAGES:
        raise ValueError(f"linkage must be one of {LINKAGES}, got {linkage!r}")
    n = dm.n
    dist: dict[tuple[int, int], float] = {}
    for i in range(n):
        for j in range(i + 1, n):
            dist[(i, j)] = dm.get(i, j)
    sizes = {i: 1 for i in range(n)}
    active = set(range(n))
    merges: list[Merge] = []
    for step in range(n - 1):
        (a, b), height = min(dist.items(), key=lambda kv: (kv[1], kv[0]))
        new_id = n + step
        merges.append(Merge(a, b, height, new_id))
        active.discard(a)
        active.discard(b)
        dist.pop((a, b))
        for other in sorted(active):
            d_a = dist.pop((min(a, other), max(a, other)))
            d_b = dist.pop((min(b, other), max(b, other)))
            if linkage == "single":
                d_new = min(d_a, d_b)
            elif linkage == "complete":
                d_new = max(d_a, d_b)
            else:
                d_new = (sizes[a] * d_a + sizes[b] * d_b) / (sizes[a] + sizes[b])
            dist[(other, new_id)] = d_new
        sizes[new_id] = sizes.pop(a) + sizes.pop(b)
        active.add(new_id)
    return Dendrogram(n, merges)


def cut_dendrogram(d: Dendrogram, k: int) -> Labeling:
    """Flatten a dendrogram into k clusters by dropping the k-1 last merges.

    Heights are nondecreasing along the merge order, so the dropped merges
    are the highest ones.  Cluster labels are assigned 0..k-1 in order of
    each cluster's smallest leaf index.
    """
    n = d.n_leaves
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    leaf_sets = d.leaf_sets()
    for m in d.merges[: n - k]:
        roots = sorted({find(min(leaf_sets[m.node_a])), find(min(leaf_sets[m.node_b]))})
        parent[roots[1]] = roots[0]
    clusters: dict[int, list[int]] = {}
    for leaf in range(n):
        clusters.setdefault(find(leaf), []).append(leaf)
    labels = [-1] * n
    for label, root in enumerate(sorted(clusters, key=lambda r: min(clusters[r]))):
        for leaf in clusters[root]:
            labels[leaf] = label
    return labels


def relabel_by_first_member(labels: Iterable[int]) -> Labeling:
    """Canonicalize labels so cluster ids appear in order of first occurrence.

    Noise (-1) is preserved.  Useful when comparing partitions produced by
    different runs or algorithms.
    """
    mapping: dict[int, int] = {}
    out: Labeling = []
    for lab in labels:
        if lab == -1:
            out.append(-1)
            continue
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out.append(mapping[lab])
    return out
