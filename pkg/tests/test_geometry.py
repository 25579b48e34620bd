import math

import numpy as np
import pytest

from polarclust import (
    PlanePoint,
    PolarPoint,
    ReconstructionParams,
    normalize_angle,
    polar_to_cartesian,
    reconstruct,
    replicate,
)

TWO_PI = 2.0 * math.pi


class TestNormalizeAngle:
    def test_identity(self):
        assert normalize_angle(0.0) == 0.0

    def test_one_period_down(self):
        assert normalize_angle(5 * math.pi / 2) == pytest.approx(math.pi / 2, abs=1e-12)

    def test_negative_wraps_up(self):
        assert normalize_angle(-math.pi / 2) == pytest.approx(3 * math.pi / 2, abs=1e-12)

    def test_rejects_non_finite(self):
        for bad in (math.nan, math.inf, -math.inf):
            with pytest.raises(ValueError):
                normalize_angle(bad)

    def test_periodicity(self):
        rng = np.random.default_rng(1)
        for _ in range(500):
            theta = float(rng.uniform(-10 * TWO_PI, 10 * TWO_PI))
            k = int(rng.integers(-5, 6))
            a = normalize_angle(theta)
            b = normalize_angle(theta + TWO_PI * k)
            assert abs(a - b) < 1e-9 or abs(abs(a - b) - TWO_PI) < 1e-9

    def test_range(self):
        rng = np.random.default_rng(2)
        for theta in rng.uniform(-100.0, 100.0, 1000):
            out = normalize_angle(float(theta))
            assert 0.0 <= out < TWO_PI
        assert 0.0 <= normalize_angle(-1e-18) < TWO_PI


class TestPolarPoint:
    def test_normalizes_on_construction(self):
        p = PolarPoint(1.0, -math.pi / 2)
        assert p.theta == pytest.approx(3 * math.pi / 2, abs=1e-12)

    def test_rejects_negative_radius(self):
        with pytest.raises(ValueError):
            PolarPoint(-0.1, 0.0)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            PolarPoint(math.nan, 0.0)


class TestPolarToCartesian:
    def test_unit_axis_point(self):
        c = polar_to_cartesian(PolarPoint(1.0, 0.0))
        assert (c.x, c.y) == (1.0, 0.0)

    def test_low_radius_probe(self):
        # the (0.2, pi/2) probe used throughout the bundled example
        c = polar_to_cartesian(PolarPoint(0.2, math.pi / 2))
        assert c.x == pytest.approx(0.0, abs=1e-15)
        assert c.y == pytest.approx(0.2, abs=1e-15)

    def test_origin_degeneracy(self):
        c = polar_to_cartesian(PolarPoint(0.0, 2.3))
        assert (c.x, c.y) == (0.0, 0.0)


class TestReconstruct:
    def test_direct_substitution(self):
        p = reconstruct(PolarPoint(0.5, math.pi), ReconstructionParams(1.0))
        assert (p.x_prime, p.y_prime) == (math.pi, 0.5)

    def test_radius_two(self):
        p = reconstruct(PolarPoint(1.0, math.pi / 2), ReconstructionParams(2.0))
        assert (p.x_prime, p.y_prime) == (math.pi, 1.0)

    def test_zero_angle(self):
        p = reconstruct(PolarPoint(0.7, 0.0), ReconstructionParams(1.0))
        assert (p.x_prime, p.y_prime) == (0.0, 0.7)

    def test_invertible_on_base_period(self):
        rng = np.random.default_rng(3)
        params = ReconstructionParams(base_radius=1.7)
        for _ in range(300):
            src = PolarPoint(float(rng.uniform(0, 3)), float(rng.uniform(0, TWO_PI)))
            plane = reconstruct(src, params)
            assert plane.x_prime / params.base_radius == pytest.approx(src.theta, abs=1e-12)
            assert plane.y_prime == src.r

    def test_scaling_base_radius_scales_x_only(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            src = PolarPoint(float(rng.uniform(0, 2)), float(rng.uniform(0, TWO_PI)))
            alpha = float(rng.uniform(0.1, 10))
            a = reconstruct(src, ReconstructionParams(1.0))
            b = reconstruct(src, ReconstructionParams(alpha))
            assert b.x_prime == pytest.approx(alpha * a.x_prime, rel=1e-12)
            assert b.y_prime == a.y_prime

    def test_base_period_range(self):
        params = ReconstructionParams(base_radius=3.0)
        p = reconstruct(PolarPoint(1.0, TWO_PI - 1e-9), params)
        assert 0.0 <= p.x_prime < params.period_width


class TestReplicate:
    def test_five_periods_of_seven(self):
        params = ReconstructionParams(1.0, repetitions=4)
        base = [reconstruct(PolarPoint(1.0, t), params) for t in np.linspace(0, 6, 7)]
        out = replicate(base, params)
        assert len(out) == 35
        assert sorted(set(c.period for c in out)) == [0, 1, 2, 3, 4]

    def test_zero_repetitions_is_identity(self):
        params = ReconstructionParams(1.0, repetitions=0)
        base = [PlanePoint(1.0, 0.5), PlanePoint(2.0, 0.1)]
        out = replicate(base, params)
        assert [(c.point, c.origin, c.period) for c in out] == [
            (base[0], 0, 0),
            (base[1], 1, 0),
        ]

    def test_offsets_are_period_multiples(self):
        params = ReconstructionParams(1.0, repetitions=2)
        out = replicate([PlanePoint(1.0, 0.5)], params)
        assert [(c.point.x_prime, c.point.y_prime, c.period) for c in out] == [
            (1.0, 0.5, 0),
            (1.0 + TWO_PI, 0.5, 1),
            (1.0 + 2 * TWO_PI, 0.5, 2),
        ]

    def test_size_and_mod_recovery(self):
        rng = np.random.default_rng(5)
        params = ReconstructionParams(base_radius=2.5, repetitions=3)
        base = [
            PlanePoint(float(rng.uniform(0, params.period_width * 0.999)), float(rng.uniform(0, 2)))
            for _ in range(11)
        ]
        out = replicate(base, params)
        assert len(out) == params.n_periods * len(base)
        for copy in out:
            recovered = math.fmod(copy.point.x_prime, params.period_width)
            assert abs(recovered - base[copy.origin].x_prime) < 1e-9
            assert copy.point.y_prime == base[copy.origin].y_prime

    def test_rejects_points_outside_base_period(self):
        params = ReconstructionParams(1.0, repetitions=1)
        with pytest.raises(ValueError):
            replicate([PlanePoint(params.period_width + 0.5, 1.0)], params)


class TestReconstructionParams:
    def test_rejects_nonpositive_radius(self):
        with pytest.raises(ValueError):
            ReconstructionParams(0.0)

    def test_rejects_negative_repetitions(self):
        with pytest.raises(ValueError):
            ReconstructionParams(1.0, repetitions=-1)
