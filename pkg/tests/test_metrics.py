import math

import numpy as np
import pytest

from polarclust import (
    DistanceMatrix,
    PolarPoint,
    circular_distance,
    euclidean_distance,
    manhattan_distance,
    pairwise_circular,
)
from polarclust.metrics import condensed_index

from oracles import replicated_min_distance

TWO_PI = 2.0 * math.pi


def random_polar(rng, n, r_hi=2.0):
    return [
        PolarPoint(float(rng.uniform(0, r_hi)), float(rng.uniform(0, TWO_PI)))
        for _ in range(n)
    ]


class TestVectorDistances:
    def test_manhattan_examples(self):
        assert manhattan_distance((0, 0), (3, 4)) == 7.0
        assert manhattan_distance((1, 2, 3), (1, 2, 3)) == 0.0
        assert manhattan_distance((-1, 0), (1, 0)) == 2.0

    def test_euclidean_examples(self):
        assert euclidean_distance((0, 0), (3, 4)) == 5.0
        assert euclidean_distance((1.5, -2), (1.5, -2)) == 0.0
        assert euclidean_distance((0, 0, 0), (1, 1, 1)) == pytest.approx(math.sqrt(3), abs=1e-15)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            manhattan_distance((1, 2), (1, 2, 3))
        with pytest.raises(ValueError):
            euclidean_distance((1,), (1, 2))


class TestCircularDistance:
    def test_identity(self):
        p = PolarPoint(1.3, 0.7)
        assert circular_distance(p, p, 1.0) == 0.0

    def test_wraparound_arc(self):
        p = PolarPoint(1.0, 0.1)
        q = PolarPoint(1.0, TWO_PI - 0.1)
        assert circular_distance(p, q, 1.0) == pytest.approx(0.2, abs=1e-12)

    def test_matches_replication_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(2000):
            p, q = random_polar(rng, 2)
            radius = float(rng.choice([0.5, 1.0, 10.0]))
            assert circular_distance(p, q, radius) == pytest.approx(
                replicated_min_distance(p, q, radius), abs=1e-12
            )

    def test_bounded_by_unshifted_copy(self):
        rng = np.random.default_rng(12)
        for _ in range(500):
            p, q = random_polar(rng, 2)
            direct = math.hypot(p.theta - q.theta, p.r - q.r)
            assert circular_distance(p, q, 1.0) <= direct + 1e-12

    def test_nondecreasing_in_base_radius(self):
        rng = np.random.default_rng(13)
        for _ in range(300):
            p, q = random_polar(rng, 2)
            radii = sorted(rng.uniform(0.1, 20.0, 3))
            values = [circular_distance(p, q, r) for r in radii]
            assert values == sorted(values)

    def test_rotation_invariance(self):
        rng = np.random.default_rng(14)
        for _ in range(500):
            p, q = random_polar(rng, 2)
            delta = float(rng.uniform(0, TWO_PI))
            p2 = PolarPoint(p.r, (p.theta + delta) % TWO_PI)
            q2 = PolarPoint(q.r, (q.theta + delta) % TWO_PI)
            assert circular_distance(p, q, 1.0) == pytest.approx(
                circular_distance(p2, q2, 1.0), abs=1e-12
            )

    def test_metric_axioms_on_random_triples(self):
        rng = np.random.default_rng(15)
        for _ in range(2000):
            a, b, c = random_polar(rng, 3)
            radius = float(rng.choice([0.5, 1.0, 10.0]))
            dab = circular_distance(a, b, radius)
            dba = circular_distance(b, a, radius)
            dac = circular_distance(a, c, radius)
            dbc = circular_distance(b, c, radius)
            assert dab >= 0.0
            assert dab == dba
            assert dab <= dac + dbc + 1e-9

    def test_rejects_nonpositive_radius(self):
        p = PolarPoint(1.0, 0.0)
        with pytest.raises(ValueError):
            circular_distance(p, p, 0.0)


class TestCondensedLayout:
    def test_index_bijection(self):
        n = 9
        seen = set()
        for i in range(n):
            for j in range(i + 1, n):
                idx = condensed_index(n, i, j)
                assert idx not in seen
                seen.add(idx)
                assert condensed_index(n, j, i) == idx
        assert seen == set(range(n * (n - 1) // 2))

    def test_diagonal_rejected(self):
        with pytest.raises(IndexError):
            condensed_index(4, 2, 2)

    def test_matrix_round_trip(self):
        rng = np.random.default_rng(16)
        square = rng.uniform(0, 5, (6, 6))
        square = (square + square.T) / 2
        np.fill_diagonal(square, 0.0)
        dm = DistanceMatrix.from_square(square)
        assert np.allclose(dm.to_square(), square)
        assert dm.get(2, 4) == square[2, 4]

    def test_validation(self):
        with pytest.raises(ValueError):
            DistanceMatrix(3, np.array([1.0, 2.0]))  # wrong size
        with pytest.raises(ValueError):
            DistanceMatrix(3, np.array([1.0, -2.0, 3.0]))  # negative entry


class TestPairwiseCircular:
    def test_two_points(self):
        pts = [PolarPoint(1.0, 0.2), PolarPoint(0.5, 5.0)]
        dm = pairwise_circular(pts, 1.0)
        assert dm.n == 2
        assert dm.get(0, 1) == circular_distance(pts[0], pts[1], 1.0)

    def test_matches_per_pair_oracle_on_fixture(self):
        from polarclust.datasets import seven_point_example

        pts, _ = seven_point_example()
        dm = pairwise_circular(pts, 1.0)
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                assert dm.get(i, j) == pytest.approx(
                    replicated_min_distance(pts[i], pts[j], 1.0), abs=1e-12
                )

    def test_identical_points_all_zero(self):
        pts = [PolarPoint(1.0, 1.0)] * 5
        dm = pairwise_circular(pts, 2.0)
        assert np.all(dm.values == 0.0)

    def test_rejects_single_point(self):
        with pytest.raises(ValueError):
            pairwise_circular([PolarPoint(1.0, 0.0)], 1.0)
