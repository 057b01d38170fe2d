import unittest

from dgeo.core.config import load_config, shipped_config
from dgeo.core.errors import (DescentBudgetExceeded, DescentNotDecreasing, GeodesicError,
                              RangeOverflow, SpacelikeStep)
from dgeo.core.geometry import DeviationFunction, DistanceDeviation, LatticePoint
from dgeo.core.metrics import MinkowskiField
from dgeo.solver.descent import (SolverConfig, local_minimize, next_point, run_geodesic,
                                 initial_points, count_velocity_states, exhaustive_minimize,
                                 audit_geodesic, neighbour_offsets, Trajectory)
from dgeo.solver.predictors import Predictor, ConstantAcceleration, ConstantJerk


class TestPredictors(unittest.TestCase):

    def test_registry(self):
        self.assertEqual(sorted(Predictor.get_names()),
                         ["constant-acceleration", "constant-jerk", "constant-velocity"])
        with self.assertRaises(ValueError):
            Predictor.from_name("oracle")

    def test_constant_velocity(self):
        self.assertEqual(Predictor.from_name("constant-velocity").predict([(0, 0), (3, 2)]),
                         (6, 4))

    def test_constant_acceleration(self):
        p = ConstantAcceleration()
        self.assertEqual(p.predict([(0, 5), (1, 5), (3, 5)]), (6, 5))
        # short history: constant velocity
        self.assertEqual(p.predict([(0, 5), (1, 5)]), (2, 5))

    def test_constant_jerk(self):
        self.assertEqual(ConstantJerk().predict([(0,), (1,), (3,), (6,)]), (10,))
        self.assertEqual(ConstantJerk().predict([(1,), (3,), (6,)]), (10,))


class RisingDeviation(DeviationFunction):

    """Distance deviation raised by 1e6 on every evaluation of a prepared triple"""

    def prepare(self, field, E, F, delta):
        inner = DistanceDeviation().prepare(field, E, F, delta)
        calls = []

        class Evaluator(object):
            def evaluate(self, points):
                w, spacelike, q = inner.evaluate(points)
                calls.append(1)
                return w + 1e6 * len(calls), spacelike, q

        return Evaluator()


class TestLocalMinimize(unittest.TestCase):

    def setUp(self):
        self.flat = MinkowskiField(n=2)
        self.a = 10
        self.cfg = SolverConfig(self.a)
        self.E = LatticePoint((0, 0, 0))
        self.F = LatticePoint((10, 3, 0))

    def test_collinear_guess(self):
        G, record = local_minimize(self.flat, self.E, self.F, LatticePoint((20, 6, 0)), self.cfg)
        self.assertEqual(G, LatticePoint((20, 6, 0)))
        self.assertEqual(record.descent_iterations, 0)
        self.assertEqual(record.final_deviation, 0.0)
        self.assertEqual(record.velocity, (3, 0))
        self.assertEqual(record.acceleration, (0, 0))

    def test_offset_guess(self):
        G, record = local_minimize(self.flat, self.E, self.F, LatticePoint((20, 9, 3)), self.cfg)
        self.assertEqual(G, LatticePoint((20, 6, 0)))
        self.assertGreater(record.descent_iterations, 0)
        self.assertLessEqual(record.descent_iterations, 6)
        best, w = exhaustive_minimize(self.flat, self.E, self.F, self.cfg)
        self.assertEqual(best, G)
        self.assertEqual(w, 0.0)

    def test_local_minimum_condition(self):
        G, record = local_minimize(self.flat, self.E, self.F, LatticePoint((20, 1, -2)), self.cfg)
        traj = Trajectory([self.E, self.F, G], 1.0, self.a)
        self.assertEqual(audit_geodesic(self.flat, traj, self.cfg), [])

    def test_budget(self):
        cfg = SolverConfig(self.a, max_descent_iters=1)
        with self.assertRaises(DescentBudgetExceeded):
            local_minimize(self.flat, self.E, self.F, LatticePoint((20, 9, 3)), cfg)

    def test_rising_deviation(self):
        cfg = SolverConfig(self.a, deviation=RisingDeviation())
        with self.assertRaises(DescentNotDecreasing) as ctx:
            local_minimize(self.flat, self.E, self.F, LatticePoint((20, 9, 3)), cfg)
        self.assertIsInstance(ctx.exception, GeodesicError)
        self.assertIn("(20, ", str(ctx.exception))

    def test_spacelike_neighbours_excluded(self):
        F = LatticePoint((10, 0, 0))
        G, record = local_minimize(self.flat, self.E, F, LatticePoint((20, 10, 0)), self.cfg)
        self.assertEqual(G, LatticePoint((20, 0, 0)))
        self.assertGreater(record.excluded, 0)

    def test_every_neighbour_spacelike(self):
        F = LatticePoint((10, 0, 0))
        with self.assertRaises(SpacelikeStep):
            local_minimize(self.flat, self.E, F, LatticePoint((20, 14, 0)), self.cfg)

    def test_next_point_uniform_history(self):
        G, record = next_point(self.flat, self.E, self.F, self.cfg)
        self.assertEqual(G, LatticePoint((20, 6, 0)))
        self.assertEqual(record.descent_iterations, 0)
        self.assertEqual(record.guess, (6, 0))
        with self.assertRaises(ValueError):
            next_point(self.flat, self.E, LatticePoint((11, 3, 0)), self.cfg)

    def test_neighbour_offsets(self):
        offsets = neighbour_offsets(2)
        self.assertEqual(offsets.shape, (9, 2))
        self.assertEqual(tuple(offsets[4]), (0, 0))
        self.assertEqual([tuple(o) for o in offsets], sorted(tuple(o) for o in offsets))


class TestRunGeodesic(unittest.TestCase):

    def setUp(self):
        self.flat = MinkowskiField(n=2)

    def test_straight_line(self):
        a, u = 10, 3
        traj = run_geodesic(self.flat, LatticePoint((0, 0, 0)), LatticePoint((a, u, 0)), 100,
                            SolverConfig(a))
        self.assertEqual(len(traj), 102)
        for k, P in enumerate(traj.points):
            self.assertEqual(P, LatticePoint((k * a, k * u, 0)))
        self.assertEqual(traj.violations, [])
        self.assertEqual(traj.summary()['descent_moves'], 0)

    def test_long_straight_line(self):
        a = 7
        E0, E1 = LatticePoint((0, -4, 9)), LatticePoint((a, -2, 6))
        traj = run_geodesic(self.flat, E0, E1, 10 ** 4, SolverConfig(a))
        for k, P in enumerate(traj.points):
            self.assertEqual(P.coords, (k * a, -4 + 2 * k, 9 - 3 * k))
        self.assertTrue(all(r.final_deviation == 0.0 for r in traj.records))

    def test_predictors_agree_in_flat_space(self):
        E0, E1 = LatticePoint((0, 0, 0)), LatticePoint((20, 5, -3))
        points = [run_geodesic(self.flat, E0, E1, 30, SolverConfig(20, predictor=name)).points
                  for name in Predictor.get_names()]
        self.assertEqual(points[0], points[1])
        self.assertEqual(points[0], points[2])

    def test_zero_steps(self):
        E0, E1 = LatticePoint((0, 0, 0)), LatticePoint((5, 1, 1))
        traj = run_geodesic(self.flat, E0, E1, 0, SolverConfig(5))
        self.assertEqual(traj.points, [E0, E1])
        self.assertEqual(traj.records, [])

    def test_start_times_checked(self):
        with self.assertRaises(ValueError):
            run_geodesic(self.flat, LatticePoint((1, 0, 0)), LatticePoint((6, 0, 0)), 1,
                         SolverConfig(5))

    def test_error_carries_step_index(self):
        # a spacelike start: the probes around E1 already fail
        with self.assertRaises(SpacelikeStep) as ctx:
            run_geodesic(self.flat, LatticePoint((0, 0, 0)), LatticePoint((5, 5, 0)), 3,
                         SolverConfig(5))
        self.assertEqual(ctx.exception.step_index, 2)
        self.assertTrue(str(ctx.exception).startswith("step 2: "))


class TestInitialPoints(unittest.TestCase):

    def test_planet_values(self):
        E0, E1 = initial_points(1e8, 0.0, 0.0, 0.02, 1.0, 10 ** 7)
        self.assertEqual(E0, LatticePoint((0, 10 ** 8, 0)))
        self.assertEqual(E1, LatticePoint((10 ** 7, 10 ** 8, 2 * 10 ** 5)))

    def test_at_rest(self):
        E0, E1 = initial_points(30.0, -12.0, 0.0, 0.0, 3.0, 4)
        self.assertEqual(E0, LatticePoint((0, 10, -4)))
        self.assertEqual(E1, LatticePoint((4, 10, -4)))

    def test_rounding(self):
        E0, E1 = initial_points(0.0, 0.0, 0.0, 0.0249999996, 1.0, 10 ** 7)
        self.assertEqual(E1[2], 250000)
        E0, E1 = initial_points(-2.5, 2.5, -0.25, 0.25, 1.0, 2)
        self.assertEqual(E0.spatial, (-3, 3))
        self.assertEqual(E1.spatial, (-4, 4))

    def test_errors(self):
        with self.assertRaises(ValueError):
            initial_points(0.0, 0.0, 0.6, 0.8, 1.0, 10)
        with self.assertRaises(RangeOverflow):
            initial_points(1e30, 0.0, 0.0, 0.0, 1.0, 10)


class TestVelocityStates(unittest.TestCase):

    def test_count(self):
        self.assertEqual(count_velocity_states(1, 2), 9)
        self.assertEqual(count_velocity_states(0, 5), 1)
        self.assertEqual(count_velocity_states(10 ** 7, 2), 400000040000001)


class TestSmallSchwarzschildRun(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = load_config(shipped_config("schwarzschild_small.cfg"))
        cls.field = cls.config.metric_field()
        cls.cfg = cls.config.solver_config()
        E0, E1 = cls.config.initial_points()
        cls.traj = run_geodesic(cls.field, E0, E1, cls.config.steps, cls.cfg)

    def test_length(self):
        self.assertEqual(len(self.traj), self.config.steps + 2)
        self.assertGreaterEqual(self.config.steps, 50)
        for k, P in enumerate(self.traj.points):
            self.assertEqual(P.time, k * self.config.a)

    def test_brute_force_oracle(self):
        points = self.traj.points
        for i in range(1, len(points) - 1):
            best, w = exhaustive_minimize(self.field, points[i - 1], points[i], self.cfg)
            self.assertEqual(best, points[i + 1], "step %d" % (i + 1))
            self.assertEqual(w, self.traj.record(i + 1).final_deviation)

    def test_audit(self):
        self.assertEqual(audit_geodesic(self.field, self.traj, self.cfg), [])

    def test_records(self):
        points = self.traj.points
        for i in range(2, len(points)):
            record = self.traj.record(i)
            S = tuple(q - p for p, q in zip(points[i - 1].spatial, points[i].spatial))
            S_prev = tuple(q - p for p, q in zip(points[i - 2].spatial, points[i - 1].spatial))
            self.assertEqual(record.index, i)
            self.assertEqual(record.velocity, S)
            self.assertEqual(record.acceleration, tuple(s - p for s, p in zip(S, S_prev)))

    def test_predictor_independence(self):
        E0, E1 = self.config.initial_points()
        other = run_geodesic(self.field, E0, E1, self.config.steps,
                             SolverConfig(self.config.a, delta=self.config.delta_cm,
                                          predictor="constant-velocity"))
        self.assertEqual(other.points, self.traj.points)

    def test_deterministic(self):
        E0, E1 = self.config.initial_points()
        again = run_geodesic(self.field, E0, E1, self.config.steps, self.cfg)
        self.assertEqual(again.points, self.traj.points)
        self.assertEqual([r.final_deviation for r in again.records],
                         [r.final_deviation for r in self.traj.records])

    def test_spatial_axes_variant(self):
        E0, E1 = self.config.initial_points()
        cfg = SolverConfig(self.config.a, delta=self.config.delta_cm, axes="spatial")
        traj = run_geodesic(self.field, E0, E1, 10, cfg)
        self.assertEqual(audit_geodesic(self.field, traj, cfg), [])


if __name__ == "__main__":
    unittest.main()
