"""Brute-force reference implementations used to pin expected values.

Everything here deliberately avoids the library's own computation paths:
distances come from literal replication, clusterings from exhaustive
enumeration or direct reachability, tree heights from minimum spanning
trees and lowest-common-merge scans.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

TWO_PI = 2.0 * math.pi


def replicated_min_distance(p, q, base_radius: float, k_range=range(-2, 3)) -> float:
    """Minimum Euclidean distance between plane images over shifted copies."""
    best = math.inf
    for k in k_range:
        dx = base_radius * p.theta - base_radius * (q.theta + TWO_PI * k)
        dy = p.r - q.r
        best = min(best, math.sqrt(dx * dx + dy * dy))
    return best


def exhaustive_best_two_partition_sse(X: np.ndarray):
    """All 2-partitions of rows of X, scored by within-cluster squared error."""
    n = len(X)
    best = None
    for mask in range(1, 2 ** (n - 1)):
        a = [0] + [i for i in range(1, n) if (mask >> (i - 1)) & 1]
        b = [i for i in range(1, n) if not (mask >> (i - 1)) & 1]
        if not b:
            continue
        sse = 0.0
        for grp in (a, b):
            pts = X[grp]
            sse += float(((pts - pts.mean(axis=0)) ** 2).sum())
        if best is None or sse < best[0]:
            best = (sse, frozenset(a), frozenset(b))
    return best


def exhaustive_best_two_partition_dispersion(square: np.ndarray):
    """All 2-partitions scored by sum over groups of pairwise d^2 / group size."""
    n = square.shape[0]
    best = None
    for mask in range(1, 2 ** (n - 1)):
        a = [0] + [i for i in range(1, n) if (mask >> (i - 1)) & 1]
        b = [i for i in range(1, n) if not (mask >> (i - 1)) & 1]
        if not b:
            continue
        cost = 0.0
        for grp in (a, b):
            if len(grp) < 2:
                continue
            pair_sq = sum(square[i, j] ** 2 for i, j in itertools.combinations(grp, 2))
            cost += pair_sq / len(grp)
        if best is None or cost < best[0]:
            best = (cost, frozenset(a), frozenset(b))
    return best


def brute_dbscan_from_matrix(square: np.ndarray, eps: float, min_pts: int):
    """Direct density-reachability clustering from a distance matrix.

    Returns (labels, core_mask).  Border points join the lowest-id cluster
    that can reach them, mirroring the library's deterministic scan.
    """
    n = square.shape[0]
    neighbors = [np.flatnonzero(square[i] <= eps) for i in range(n)]
    core = np.array([len(nb) >= min_pts for nb in neighbors])
    labels = [-1] * n
    cid = 0
    for i in range(n):
        if labels[i] != -1 or not core[i]:
            continue
        labels[i] = cid
        frontier = [i]
        while frontier:
            u = frontier.pop()
            for v in neighbors[u]:
                if core[v] and labels[v] == -1:
                    labels[v] = cid
                    frontier.append(v)
    # borders: attach to the smallest cluster id among reachable cores
    for i in range(n):
        if core[i] or labels[i] != -1:
            continue
        owners = sorted(labels[v] for v in neighbors[i] if core[v] and labels[v] != -1)
        if owners:
            labels[i] = owners[0]
    return labels, core


def mst_edge_weights(square: np.ndarray) -> list[float]:
    """Prim's algorithm; the sorted MST weights equal single-linkage heights."""
    n = square.shape[0]
    in_tree = [False] * n
    in_tree[0] = True
    best = square[0].copy()
    weights: list[float] = []
    for _ in range(n - 1):
        candidates = [(best[i], i) for i in range(n) if not in_tree[i]]
        w, i = min(candidates)
        weights.append(float(w))
        in_tree[i] = True
        best = np.minimum(best, square[i])
    return sorted(weights)


def cophenetic_by_lca(dend) -> dict[tuple[int, int], float]:
    """Height of the first merge containing each leaf pair, by direct scan."""
    n = dend.n_leaves
    membership = {i: {i} for i in range(n)}
    heights: dict[tuple[int, int], float] = {}
    for m in dend.merges:
        left = membership.pop(m.node_a)
        right = membership.pop(m.node_b)
        for i in left:
            for j in right:
                heights[(min(i, j), max(i, j))] = m.height
        membership[m.new_id] = left | right
    return heights


def partition_of(labels) -> set[frozenset[int]]:
    """Non-noise clusters as a set of frozensets."""
    return {
        frozenset(i for i, lab in enumerate(labels) if lab == value)
        for value in set(labels)
        if value != -1
    }


def core_partition_of(labels, core) -> set[frozenset[int]]:
    """Clusters restricted to core points, empty groups dropped."""
    parts = set()
    for value in set(labels):
        if value == -1:
            continue
        group = frozenset(
            i for i, lab in enumerate(labels) if lab == value and core[i]
        )
        if group:
            parts.add(group)
    return parts


def merge_leaf_sequence(dend) -> list[frozenset[int]]:
    """Tree topology as the ordered list of merged leaf sets."""
    sets = dend.leaf_sets()
    return [sets[m.new_id] for m in dend.merges]


def kmedoids_circular(square: np.ndarray, k: int, n_restarts: int = 256, seed: int = 0):
    """Alternating k-medoids on a precomputed distance matrix.

    Used as an independent strong baseline for the K-means search: it sees
    only the closed-form circular distances, never the replicated plane.
    """
    n = square.shape[0]
    best = None
    for restart in range(n_restarts):
        rng = np.random.default_rng([seed, restart])
        medoids = list(rng.choice(n, size=k, replace=False))
        for _ in range(100):
            assign = np.argmin(square[:, medoids], axis=1)
            new_medoids = []
            for j in range(k):
                members = np.flatnonzero(assign == j)
                if len(members) == 0:
                    new_medoids.append(medoids[j])
                    continue
                costs = square[np.ix_(members, members)].sum(axis=1)
                new_medoids.append(int(members[int(np.argmin(costs))]))
            if new_medoids == medoids:
                break
            medoids = new_medoids
        assign = np.argmin(square[:, medoids], axis=1)
        cost = float(square[np.arange(n), np.array(medoids)[assign]].sum())
        if best is None or cost < best[0]:
            best = (cost, assign.tolist())
    return best[1]
