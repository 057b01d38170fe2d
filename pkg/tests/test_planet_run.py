"""Planet around a solar mass star: the shipped 1 cm lattice configuration
run against the continuum reference (takes a minute)
"""

import math
import unittest

from dgeo.core.config import load_config, shipped_config
from dgeo.core.data_def import GeoData
from dgeo.orbit.analysis import (PERIHELION, APHELION, alternates, shift_summary,
                                 theoretical_shift)
from dgeo.orbit.report import format_report
from dgeo.solver.descent import run_geodesic
import dgeo.core.prefs as prefs


class TestPerihelionShift(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.data = GeoData(load_config(shipped_config("schwarzschild_planet.cfg"), ["audit=yes"]))
        cls.data.compare()
        cls.perihelia = [e for e in cls.data.apsides if e.kind == PERIHELION]
        cls.aphelia = [e for e in cls.data.apsides if e.kind == APHELION]

    def test_apsides(self):
        self.assertTrue(alternates(self.data.apsides))
        self.assertGreaterEqual(len(self.perihelia), 2)
        self.assertGreaterEqual(len(self.aphelia), 2)
        self.assertEqual(self.data.apsides[0].kind, PERIHELION)
        self.assertLess(abs(self.perihelia[0].sample.r / 1.5095913e7 - 1), 0.01)
        self.assertLess(abs(self.aphelia[0].sample.r / 1.0016196e8 - 1), 0.01)
        self.assertLess(abs(self.perihelia[0].sample.t / 3.58e9 - 1), 0.01)
        self.assertLess(abs(self.aphelia[0].sample.t / 7.15e9 - 1), 0.01)

    def test_observed_shift(self):
        summary = shift_summary(self.data.apsides, 3e5)
        self.assertLess(abs(summary['observed'][0] - 6.267), 0.25)
        theoretical = summary['theoretical'][0]
        self.assertAlmostEqual(theoretical, theoretical_shift(3e5, self.aphelia[0].sample.r,
                                                              self.perihelia[0].sample.r),
                               places=9)
        self.assertLess(abs(summary['observed'][0] / theoretical - 1), 0.02)

    def test_starting_pair(self):
        initial = self.data.initial_apsis
        self.assertEqual((initial.kind, initial.index), (APHELION, 1))
        self.assertEqual(initial.sample.angle, math.degrees(math.atan2(2e5, 1e8)))
        plain = shift_summary(self.data.apsides, 3e5)['observed']
        based = shift_summary(self.data.apsides, 3e5, initial)['observed']
        self.assertEqual(len(based), len(plain) + 1)
        self.assertLess(abs(based[0] - 6.2108), 0.25)
        self.assertEqual(based[1], plain[0])

    def test_report(self):
        text = format_report(self.data.series, self.data.apsides, 3e5, self.data.initial_apsis)
        blocks = text.rstrip("\n").split("\n" + prefs.REPORT_SEPARATOR + "\n")
        self.assertEqual([b.split("\n")[0] for b in blocks[:4]],
                         ["Perihelion", "Aphelion", "Perihelion", "Aphelion"])
        self.assertIn("theoretical shift = ", blocks[1])
        self.assertIn("observed shift = ", blocks[1])
        self.assertIn("observed shift = ", blocks[3])

    def test_audit(self):
        self.assertEqual(self.data.audit_violations, [])
        self.assertEqual(self.data.trajectory.violations, [])

    def test_continuum_agreement(self):
        summary = self.data.compare_summary
        self.assertEqual(summary['compared_steps'], 1451)
        self.assertLess(summary['quarter_orbit_max_relative'], 0.01)
        lattice = summary['lattice_observed_shifts']
        reference = summary['reference_observed_shifts']
        self.assertTrue(lattice and reference)
        self.assertLess(abs(lattice[0] - reference[0]), 0.15)


class TestPredictorIndependence(unittest.TestCase):

    """The first steps of the planet run with two different first guesses"""

    def test_same_points(self):
        runs = {}
        for name in ("constant-velocity", "constant-acceleration"):
            config = load_config(shipped_config("schwarzschild_planet.cfg"),
                                 ["steps=40", "predictor=" + name])
            E0, E1 = config.initial_points()
            runs[name] = run_geodesic(config.metric_field(), E0, E1, config.steps,
                                      config.solver_config())
        velocity = runs["constant-velocity"]
        acceleration = runs["constant-acceleration"]
        self.assertEqual(len(velocity), 42)
        self.assertEqual(velocity.points, acceleration.points)
        self.assertLess(acceleration.summary()['descent_moves'],
                        velocity.summary()['descent_moves'])


if __name__ == "__main__":
    unittest.main()
