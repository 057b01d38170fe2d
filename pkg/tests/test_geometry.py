import math
from decimal import Decimal, localcontext
import unittest

import numpy as np
from numpy.testing import assert_allclose

from dgeo.core.errors import RangeOverflow, SpacelikeStep, ZeroLength
from dgeo.core.geometry import (LatticePoint, ContinuousPoint, MetricTensor, Displacement,
                                proper_interval, three_point_length, deviation_discrete,
                                deviation_continuous, resolve_axes, UserDeviation,
                                DistanceDeviation, ProbeSet, deviation)
from dgeo.core.metrics import MinkowskiField, SchwarzschildField

FLAT = np.diag([1.0, -1.0, -1.0])


def flat_length(E, F, G):
    def d(P, Q):
        D = [q - p for p, q in zip(P, Q)]
        return math.sqrt(D[0] ** 2 - D[1] ** 2 - D[2] ** 2)
    return d(E, F) + d(F, G)


def exact_deviation(m, E, F, G):
    """Distance induced deviation of lattice points in 60 digit decimals"""
    with localcontext() as ctx:
        ctx.prec = 60
        m = Decimal(m)

        def metric(P):
            x, y = P[1], P[2]
            r2 = x * x + y * y
            r = r2.sqrt()
            rm = r * (r - m)
            gxy = -m * x * y / (r2 * (r - m))
            return [[1 - m / r, 0, 0],
                    [0, -x * x / rm - y * y / r2, gxy],
                    [0, gxy, -x * x / r2 - y * y / rm]]

        def d(P, Q):
            D = [q - p for p, q in zip(P, Q)]
            g = metric(P)
            return sum(D[i] * g[i][j] * D[j] for i in range(3) for j in range(3)).sqrt()

        E, F, G = [[Decimal(c) for c in P] for P in (E, F, G)]
        total = Decimal(0)
        for mu in range(3):
            lo, hi = list(F), list(F)
            lo[mu] -= 1
            hi[mu] += 1
            diff = (d(E, lo) + d(lo, G) - d(E, hi) - d(hi, G)) / 2
            total += diff * diff
        return float(total)


class TestPoints(unittest.TestCase):

    def test_lattice_point_int64_range(self):
        LatticePoint((2 ** 63 - 1, -2 ** 63, 0))
        with self.assertRaises(RangeOverflow):
            LatticePoint((2 ** 63, 0, 0))
        with self.assertRaises(RangeOverflow):
            LatticePoint((0, -2 ** 63 - 1, 0))

    def test_lattice_point_rejects_floats(self):
        with self.assertRaises(TypeError):
            LatticePoint((0, 1.5, 0))

    def test_lattice_point_physical(self):
        P = LatticePoint((10, 3, -2))
        self.assertEqual(P.physical(2.5).coords, (25.0, 7.5, -5.0))
        self.assertEqual(P.time, 10)
        self.assertEqual(P.spatial, (3, -2))
        self.assertEqual(P.shifted(1, -1), LatticePoint((10, 2, -2)))

    def test_continuous_point_finite(self):
        with self.assertRaises(ValueError):
            ContinuousPoint((0.0, float('inf'), 0.0))

    def test_displacement(self):
        D = Displacement.between((0, 1, 2), (3, 5, 2))
        assert_allclose(D.components, [3, 4, 0])

    def test_metric_tensor_symmetric(self):
        with self.assertRaises(ValueError):
            MetricTensor([[1, 0.5], [0, -1]])
        g = MetricTensor(FLAT)
        self.assertAlmostEqual(g.determinant(), 1.0, places=14)
        assert_allclose(g.inverse(), FLAT)

    def test_resolve_axes(self):
        self.assertEqual(resolve_axes('all', 3), (0, 1, 2))
        self.assertEqual(resolve_axes('spatial', 3), (1, 2))
        self.assertEqual(resolve_axes([2, 1, 2], 3), (1, 2))
        with self.assertRaises(ValueError):
            resolve_axes([3], 3)


class TestProperInterval(unittest.TestCase):

    def test_flat(self):
        self.assertEqual(proper_interval(FLAT, (0, 0, 0), (5, 3, 0)), 4.0)

    def test_zero_displacement(self):
        self.assertEqual(proper_interval(FLAT, (7, 1, 2), (7, 1, 2)), 0.0)

    def test_lightlike_accepted(self):
        self.assertEqual(proper_interval(FLAT, (0, 0, 0), (5, 3, 4)), 0.0)

    def test_spacelike(self):
        with self.assertRaises(SpacelikeStep) as ctx:
            proper_interval(FLAT, (0, 0, 0), (1, 2, 0))
        self.assertEqual(ctx.exception.value, -3.0)

    def test_schwarzschild(self):
        field = SchwarzschildField(m=3e5)
        E = (0.0, 1e8, 0.0)
        d = proper_interval(field.metric(E), E, (1e7, 1e8, 2e5))
        assert_allclose(d, math.sqrt(0.997 * 1e14 - 4e10), rtol=1e-12)
        self.assertAlmostEqual(d / 1e6, 9.983, places=3)

    def test_symmetric_and_translation_invariant(self):
        E = (1.0, 2.0, 3.0)
        F = (9.0, 4.0, -1.0)
        d = proper_interval(FLAT, E, F)
        self.assertEqual(d, proper_interval(FLAT, F, E))
        self.assertEqual(d, proper_interval(FLAT, (11.0, 12.0, 13.0), (19.0, 14.0, 9.0)))
        self.assertEqual(d, proper_interval(FLAT, (1.0, 3.0, 2.0), (9.0, -1.0, 4.0)))


class TestThreePointLength(unittest.TestCase):

    def setUp(self):
        self.flat = MinkowskiField(n=2)

    def test_flat(self):
        self.assertEqual(three_point_length(self.flat, (0, 0, 0), (1, 0, 0), (2, 0, 0)), 2.0)
        self.assertEqual(three_point_length(self.flat, (3, 1, 1), (3, 1, 1), (3, 1, 1)), 0.0)

    def test_schwarzschild_segments(self):
        field = SchwarzschildField(m=3e5)
        E, F, G = (0.0, 1e8, 0.0), (1e7, 1e8, 2e5), (2e7, 1e8, 4e5)
        expected = proper_interval(field.metric(E), E, F) + proper_interval(field.metric(F), F, G)
        self.assertEqual(three_point_length(field, E, F, G), expected)


class TestDeviation(unittest.TestCase):

    def setUp(self):
        self.flat = MinkowskiField(n=2)

    def test_collinear_flat_is_zero(self):
        for k in (2, 5, 17):
            w = deviation_discrete(self.flat, LatticePoint((0, 0, 0)), LatticePoint((k, 0, 0)),
                                   LatticePoint((2 * k, 0, 0)))
            self.assertEqual(w, 0.0)
        w = deviation_discrete(self.flat, LatticePoint((0, 1, 2)), LatticePoint((10, 4, 0)),
                               LatticePoint((20, 7, -2)))
        self.assertEqual(w, 0.0)

    def test_degenerate_triple(self):
        P = LatticePoint((4, 1, 1))
        self.assertEqual(deviation_discrete(self.flat, P, P, P), 0.0)

    def test_formula(self):
        E, F, G = (0, 0, 0), (4, 1, 0), (8, 3, 0)
        expected = 0.0
        for mu in (1, 2):
            minus = list(F)
            plus = list(F)
            minus[mu] -= 1
            plus[mu] += 1
            expected += ((flat_length(E, minus, G) - flat_length(E, plus, G)) / 2) ** 2
        w = deviation_discrete(self.flat, LatticePoint(E), LatticePoint(F), LatticePoint(G),
                               axes='spatial')
        assert_allclose(w, expected, rtol=1e-12)
        self.assertGreater(w, 0)
        self.assertGreaterEqual(deviation_discrete(self.flat, LatticePoint(E), LatticePoint(F),
                                                   LatticePoint(G)), w)

    def test_discrete_equals_continuous_one_cell(self):
        field = SchwarzschildField(m=3e5)
        E, F, G = (0, 100000000, 0), (10000000, 100000000, 200000), (20000000, 99999850, 400000)
        w_d = deviation_discrete(field, LatticePoint(E), LatticePoint(F), LatticePoint(G))
        w_c = deviation_continuous(field, E, F, G, h=1.0)
        self.assertEqual(w_d, w_c)

    def test_continuous_collinear(self):
        w = deviation_continuous(self.flat, (0.0, 0.0, 0.0), (1.0, 0.3, 0.1), (2.0, 0.6, 0.2))
        self.assertLess(w, 1e-12)

    def test_continuous_decreases_towards_midpoint(self):
        E, G = (0.0, 0.0, 0.0), (2.0, 0.6, 0.0)
        values = [deviation_continuous(self.flat, E, (1.0, 0.3 + off, 0.0), G, eta=1e-4)
                  for off in (0.2, 0.1, 0.05)]
        self.assertTrue(values[0] > values[1] > values[2] > 0)

    def test_continuous_eta_convergence(self):
        E, F, G = (0.0, 0.0, 0.0), (1.0, 0.4, 0.0), (2.0, 0.6, 0.1)
        w1 = deviation_continuous(self.flat, E, F, G, eta=1e-2)
        w2 = deviation_continuous(self.flat, E, F, G, eta=5e-3)
        w_ref = deviation_continuous(self.flat, E, F, G, eta=1e-4)
        ratio = abs(w1 - w_ref) / abs(w2 - w_ref)
        self.assertTrue(3.0 < ratio < 5.0, ratio)

    def test_zero_length(self):
        with self.assertRaises(ZeroLength):
            deviation_continuous(self.flat, (1, 1, 1), (1, 1, 1), (1, 1, 1))

    def test_spacelike_segment_identified(self):
        with self.assertRaises(SpacelikeStep) as ctx:
            deviation_discrete(self.flat, LatticePoint((0, 0, 0)), LatticePoint((2, 0, 0)),
                               LatticePoint((4, 3, 0)))
        self.assertIn("-> G", str(ctx.exception))

    def test_batch_independent(self):
        field = SchwarzschildField(m=3e5)
        probes = ProbeSet(field, np.array([0.0, 1e8, 0.0]), np.array([1e7, 1e8, 2e5]),
                          (0, 1, 2), 1.0, 2.0)
        points = np.array([[2e7, 1e8 + k, 4e5 + j] for k in (-1, 0, 1) for j in (-1, 0, 1)])
        w_all, _, _ = probes.evaluate(points)
        for i in range(points.shape[0]):
            self.assertEqual(probes.evaluate(points[i:i + 1])[0][0], w_all[i])

    def test_small_cells_without_cancellation(self):
        # second step of the planet run, around the Newtonian prediction
        E, F = (0, 100000000, 0), (10000000, 100000000, 200000)
        grid = [(20000000, 99998500 + i, 400000 + j) for i in range(-3, 4) for j in range(-3, 4)]
        probes = ProbeSet(SchwarzschildField(m=3e5), np.array(E, dtype=float),
                          np.array(F, dtype=float), (0, 1, 2), 1.0, 2.0)
        w, spacelike, _ = probes.evaluate(np.array(grid, dtype=float))
        self.assertFalse(spacelike.any())
        exact = [exact_deviation(300000, E, F, G) for G in grid]
        # each central difference within 1e-10 cm of the exact one
        for value, reference in zip(w, exact):
            self.assertLess(abs(value - reference), 2e-10 * math.sqrt(reference) + 1e-20)
        self.assertEqual(int(np.argmin(w)), int(np.argmin(exact)))
        self.assertEqual(len(set(w.tolist())), len(grid))

    def test_user_deviation(self):
        def w(field, E, F, G):
            return float(np.sum((np.asarray(G) - 2 * np.asarray(F) + np.asarray(E)) ** 2))
        dev = UserDeviation(w, name="second-difference")
        self.assertEqual(dev(self.flat, LatticePoint((0, 0, 0)), LatticePoint((4, 1, 0)),
                             LatticePoint((8, 3, 0))), 1.0)
        self.assertEqual(deviation(self.flat, LatticePoint((0, 0, 0)), LatticePoint((4, 1, 0)),
                                   LatticePoint((8, 3, 0)), dev), 1.0)
        self.assertEqual(DistanceDeviation().name, "distance")

    def test_generic_entry(self):
        E, F, G = LatticePoint((0, 0, 0)), LatticePoint((10, 2, 1)), LatticePoint((20, 5, 1))
        self.assertEqual(deviation(self.flat, E, F, G), deviation_discrete(self.flat, E, F, G))
        self.assertEqual(deviation(self.flat, E, F, G, DistanceDeviation("spatial"), delta=2.0),
                         deviation_discrete(self.flat, E, F, G, axes="spatial", delta=2.0))


if __name__ == "__main__":
    unittest.main()
