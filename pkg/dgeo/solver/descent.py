# This file is part of
#
# dgeo - straightest discrete geodesics on integer spacetime lattices
#
# Copyright (C) 2026 - dgeo developers
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program. If not, see <http://www.gnu.org/licenses/>.

"""
dgeo.solver.descent
===================

Straightest discrete geodesics: each new point minimizes the deviation over
its spatial neighbours, found by a lattice gradient descent started from a
predicted point

Functions
---------
* local_minimize - descend from a first guess to a 3^n neighbourhood minimum
* next_point - predict and descend one timeline step
* run_geodesic - produce a whole trajectory
* initial_points - lattice points from physical initial conditions
* count_velocity_states - number of representable velocities (2a+1)^n
* exhaustive_minimize - brute force minimum over every cell within a radius
* audit_geodesic - post-hoc check of the local minimum condition
* neighbour_offsets - the 3^n spatial offsets in lexicographic order

Classes
-------
* SolverConfig - solver options
* StepRecord - diagnostics of one produced point
* VelocityBoundViolation - step whose displacement exceeds the time step
* AuditViolation - neighbour with a lower deviation than the chosen point
* Trajectory - points of a run and their records
"""

import itertools
from math import copysign, floor, isfinite

from numpy import array as np_array
from numpy import argmin as np_argmin
from numpy import empty as np_empty
from numpy import int64 as np_int64
from numpy import float64 as np_float64
from numpy import isinf as np_isinf
from numpy import arange as np_arange

from dgeo.core.errors import (DescentBudgetExceeded, DescentNotDecreasing,
                              GeodesicError, RangeOverflow, SpacelikeStep)
from dgeo.core.geometry import LatticePoint, DistanceDeviation, INT64_MIN, INT64_MAX
from dgeo.core.dg_logging import solver_log
from dgeo.solver.predictors import Predictor
import dgeo.core.prefs as prefs


class SolverConfig(object):

    """Solver options

    a: timeline multiplier, tau = a*delta
    delta: lattice cell size (cm)
    max_descent_iters: moves allowed to one local descent
    axes: axes varied by the deviation ('all', 'spatial' or indices)
    velocity_bound_check: report steps with |dX| > tau
    predictor: name of the first guess heuristic
    deviation: DeviationFunction (None for the distance induced one)
    """

    def __init__(self, a, delta=1.0, max_descent_iters=prefs.DEFAULT_MAX_DESCENT_ITERS,
                 axes='all', velocity_bound_check=True,
                 predictor=prefs.DEFAULT_PREDICTOR, deviation=None):
        if int(a) != a or a < 1:
            raise ValueError("timeline multiplier a must be a positive integer, got %r" % (a,))
        if int(max_descent_iters) != max_descent_iters or max_descent_iters < 1:
            raise ValueError("max_descent_iters must be a positive integer, got %r"
                             % (max_descent_iters,))
        if not delta > 0:
            raise ValueError("cell size must be positive, got %r" % (delta,))
        self.a = int(a)
        self.delta = float(delta)
        self.max_descent_iters = int(max_descent_iters)
        self.axes = axes
        self.velocity_bound_check = bool(velocity_bound_check)
        self.predictor = predictor
        Predictor.from_name(predictor)
        self.deviation = deviation

    @property
    def tau(self):
        return self.a * self.delta

    def deviation_function(self):
        if self.deviation is None:
            return DistanceDeviation(self.axes)
        return self.deviation

    def __repr__(self):
        return "SolverConfig(%s)" % ", ".join("%s=%r" % kv for kv in sorted(self.__dict__.items()))


class StepRecord(object):

    """Diagnostics of one produced point

    index: index i+1 of the produced point
    velocity: S = A_{i+1} - A_i (cells per step)
    acceleration: R = S_{i+1} - S_i
    descent_iterations: moves of the local descent
    final_deviation: deviation at the chosen point
    excluded: spacelike candidates met during the descent
    guess: predicted spatial position
    """

    __slots__ = ('index', 'velocity', 'acceleration', 'descent_iterations',
                 'final_deviation', 'excluded', 'guess')

    def __init__(self, index, velocity, acceleration, descent_iterations,
                 final_deviation, excluded=0, guess=None):
        self.index = index
        self.velocity = velocity
        self.acceleration = acceleration
        self.descent_iterations = descent_iterations
        self.final_deviation = final_deviation
        self.excluded = excluded
        self.guess = guess

    def __repr__(self):
        return "StepRecord(%s)" % ", ".join("%s=%r" % (k, getattr(self, k)) for k in self.__slots__)


class VelocityBoundViolation(object):

    __slots__ = ('index', 'displacement', 'norm', 'bound')

    def __init__(self, index, displacement, norm, bound):
        self.index = index
        self.displacement = displacement
        self.norm = norm
        self.bound = bound

    def __repr__(self):
        return "VelocityBoundViolation(index=%d, |dX|=%r > %r)" % (self.index, self.norm, self.bound)


class AuditViolation(object):

    __slots__ = ('index', 'point', 'neighbour', 'deviation', 'neighbour_deviation')

    def __init__(self, index, point, neighbour, deviation, neighbour_deviation):
        self.index = index
        self.point = point
        self.neighbour = neighbour
        self.deviation = deviation
        self.neighbour_deviation = neighbour_deviation

    def __repr__(self):
        return "AuditViolation(index=%d, %r: %r < %r)" % (
            self.index, self.neighbour, self.neighbour_deviation, self.deviation)


class Trajectory(object):

    """Points of a geodesic run

    *Attributes*
    * points - LatticePoint list, point i at time i*a
    * delta - cell size (cm)
    * a - timeline multiplier
    * metric - name of the metric field
    * metric_params - parameters of the metric field
    * records - StepRecord of every point after the first two
    * violations - VelocityBoundViolation list

    *Methods*
    * times, positions - physical coordinates (cm)
    * summary - totals over the run
    """

    def __init__(self, points, delta, a, metric="", metric_params=None):
        self.points = list(points)
        self.delta = delta
        self.a = a
        self.metric = metric
        self.metric_params = dict(metric_params or {})
        self.records = []
        self.violations = []

    def __len__(self):
        return len(self.points)

    def record(self, i):
        """Return the StepRecord of point i (None for the two starting points)"""
        return self.records[i - 2] if i >= 2 else None

    def lattice_array(self):
        """Return an int64 array (len, n+1) of lattice coordinates"""
        return np_array([p.coords for p in self.points], dtype=np_int64)

    def physical_array(self):
        return self.lattice_array().astype(np_float64) * self.delta

    def summary(self):
        n = self.points[0].n
        return {'points': len(self.points),
                'descent_moves': sum(r.descent_iterations for r in self.records),
                'max_descent_moves': max([r.descent_iterations for r in self.records] or [0]),
                'excluded_neighbours': sum(r.excluded for r in self.records),
                'velocity_violations': len(self.violations),
                'velocity_states': count_velocity_states(self.a, n)}


def neighbour_offsets(n):
    """Return an int64 array (3^n, n) of the offsets in {-1,0,1}^n, in
    lexicographic order (the zero offset sits in the middle row)
    """
    return np_array(list(itertools.product((-1, 0, 1), repeat=n)), dtype=np_int64).reshape(-1, n)


def _candidates(time, spatial, offsets, delta):
    """Return the int64 spatial candidates and their physical coordinates"""
    cand = np_array(spatial, dtype=np_int64)[None, :] + offsets
    phys = np_empty((cand.shape[0], cand.shape[1] + 1))
    phys[:, 0] = time * delta
    phys[:, 1:] = cand * delta
    return cand, phys


def local_minimize(field, E, F, C, cfg):
    """Descend from C to a point G with w(E,F,G') >= w(E,F,G) for every
    spatial neighbour G' of G. Return (G, StepRecord).

    Each move evaluates the full 3^n cube around the current point and goes
    to its lowest deviation when strictly lower than the current one (first
    in lexicographic order among ties). Spacelike candidates are excluded.

    field: MetricField
    E, F: LatticePoint, the two preceding points
    C: LatticePoint, first guess on the next timeline slot
    cfg: SolverConfig

    raise DescentBudgetExceeded after cfg.max_descent_iters moves
    raise DescentNotDecreasing if a move does not lower the deviation
    raise SpacelikeStep if every candidate of a cube is excluded
    """
    delta = cfg.delta
    evaluator = cfg.deviation_function().prepare(field, E.as_array(delta),
                                                 F.as_array(delta), delta)
    n = C.n
    offsets = neighbour_offsets(n)
    centre = (offsets.shape[0] - 1) // 2
    current = C.spatial
    w_start = None
    values = []
    moves = 0
    excluded = 0
    while True:
        cand, phys = _candidates(C.time, current, offsets, delta)
        w, spacelike, _ = evaluator.evaluate(phys)
        excluded += int(spacelike.sum())
        best = int(np_argmin(w))
        if np_isinf(w[best]):
            raise SpacelikeStep(float('inf'), "every neighbour of %r" % ((C.time,) + tuple(current),))
        w_centre = w[centre]
        if w_start is None:
            w_start = float(w_centre)
        if not w[best] < w_centre:
            break
        if values and not w[best] < values[-1]:
            raise DescentNotDecreasing(values[-1], float(w[best]),
                                       repr((C.time,) + tuple(current)))
        values.append(float(w[best]))
        moves += 1
        if moves > cfg.max_descent_iters:
            raise DescentBudgetExceeded(cfg.max_descent_iters)
        current = tuple(int(v) for v in cand[best])
    if moves:
        solver_log.debug("descent %d moves, w %r -> %r", moves, w_start, float(w_centre))
    G = LatticePoint((C.time,) + tuple(current))
    S = tuple(g - f for g, f in zip(G.spatial, F.spatial))
    S_prev = tuple(f - e for f, e in zip(F.spatial, E.spatial))
    record = StepRecord(C.time // cfg.a, S,
                        tuple(s - p for s, p in zip(S, S_prev)),
                        moves, float(w_centre), excluded, C.spatial)
    return G, record


def next_point(field, E_prev, E_i, cfg, earlier=()):
    """Predict the next point and descend from it. Return (G, StepRecord).

    field: MetricField
    E_prev, E_i: LatticePoint, the two last points (a cells apart in time)
    cfg: SolverConfig
    earlier: older points, oldest first, used by higher order predictors
    """
    if E_i.time - E_prev.time != cfg.a:
        raise ValueError("points %r and %r are not one timeline step apart" % (E_prev, E_i))
    history = [p.spatial for p in earlier] + [E_prev.spatial, E_i.spatial]
    guess = Predictor.from_name(cfg.predictor).predict(history)
    C = LatticePoint((E_i.time + cfg.a,) + guess)
    return local_minimize(field, E_prev, E_i, C, cfg)


def _check_velocity(index, P, Q, a):
    dX = tuple(q - p for p, q in zip(P.spatial, Q.spatial))
    if sum(d * d for d in dX) > a * a:
        return VelocityBoundViolation(index, dX, sum(d * d for d in dX) ** 0.5, a)
    return None


def run_geodesic(field, E0, E1, steps, cfg):
    """Return the Trajectory of steps+2 points starting with E0, E1

    field: MetricField
    E0: LatticePoint at time 0
    E1: LatticePoint at time a
    steps: number of points to produce after E1
    cfg: SolverConfig

    Errors raised while computing point i carry step_index = i.
    """
    if steps < 0:
        raise ValueError("steps must be non negative, got %r" % (steps,))
    if E0.time != 0 or E1.time != cfg.a:
        raise ValueError("starting points must sit at times 0 and a = %d" % cfg.a)
    traj = Trajectory([E0, E1], cfg.delta, cfg.a, field.name, field.get_params())
    order = Predictor.from_name(cfg.predictor).order
    if cfg.velocity_bound_check:
        violation = _check_velocity(1, E0, E1, cfg.a)
        if violation is not None:
            traj.violations.append(violation)
    points = traj.points
    for i in range(1, steps + 1):
        earlier = points[max(0, i - order):i - 1]
        try:
            G, record = next_point(field, points[i - 1], points[i], cfg, earlier)
        except GeodesicError as err:
            err.step_index = i + 1
            solver_log.error("%s", err)
            raise
        record.index = i + 1
        points.append(G)
        traj.records.append(record)
        solver_log.debug("point %d: %r, %d moves, w = %r", i + 1, G.coords,
                         record.descent_iterations, record.final_deviation)
        if cfg.velocity_bound_check:
            violation = _check_velocity(i + 1, points[i], G, cfg.a)
            if violation is not None:
                solver_log.warning("velocity bound exceeded: %r", violation)
                traj.violations.append(violation)
    solver_log.info("trajectory of %d points: %r", len(points), traj.summary())
    return traj


def _round_half_away(v):
    if not isfinite(v):
        raise RangeOverflow("coordinate %r not representable" % (v,))
    r = copysign(floor(abs(v) + 0.5), v)
    if r < INT64_MIN or r > INT64_MAX:
        raise RangeOverflow("coordinate %r outside the int64 range" % (v,))
    return int(r)


def initial_points(x0, y0, vx, vy, delta, a):
    """Return the starting lattice points (E0, E1) of a 2+1 run

    x0, y0: initial position (cm)
    vx, vy: initial velocity (fraction of c)
    delta: cell size (cm)
    a: timeline multiplier

    Coordinates are rounded half away from zero.
    """
    if not vx * vx + vy * vy < 1:
        raise ValueError("speed >= c: |v| = %r" % ((vx * vx + vy * vy) ** 0.5,))
    E0 = LatticePoint((0, _round_half_away(x0 / delta), _round_half_away(y0 / delta)))
    E1 = LatticePoint((a, E0[1] + _round_half_away(vx * a), E0[2] + _round_half_away(vy * a)))
    return E0, E1


def count_velocity_states(a, n):
    """Return (2a+1)^n as an exact integer"""
    if a < 0 or n < 1:
        raise ValueError("need a >= 0 and n >= 1, got a=%r n=%r" % (a, n))
    return (2 * int(a) + 1) ** int(n)


def exhaustive_minimize(field, E, F, cfg, radius=None):
    """Return (G, w) minimizing the deviation over every cell G of the next
    timeline slot with |G - F|_inf <= radius (default a), first in
    lexicographic order among ties

    raise SpacelikeStep if every candidate is excluded
    """
    if radius is None:
        radius = cfg.a
    delta = cfg.delta
    evaluator = cfg.deviation_function().prepare(field, E.as_array(delta),
                                                 F.as_array(delta), delta)
    n = F.n
    span = np_arange(-radius, radius + 1, dtype=np_int64)
    offsets = np_array(list(itertools.product(span, repeat=n)), dtype=np_int64).reshape(-1, n)
    cand, phys = _candidates(F.time + cfg.a, F.spatial, offsets, delta)
    w, spacelike, _ = evaluator.evaluate(phys)
    best = int(np_argmin(w))
    if np_isinf(w[best]):
        raise SpacelikeStep(float('inf'), "every cell within %d of %r" % (radius, F))
    return LatticePoint((F.time + cfg.a,) + tuple(int(v) for v in cand[best])), float(w[best])


def audit_geodesic(field, trajectory, cfg, tolerance=prefs.AUDIT_TOLERANCE):
    """Return the AuditViolation list of a trajectory: neighbours G' of a
    point E_{i+1} with w(E_{i-1},E_i,G') < w(E_{i-1},E_i,E_{i+1}) - tolerance

    An empty list certifies every point after the first two as a 3^n
    neighbourhood minimizer.
    """
    delta = cfg.delta
    deviation = cfg.deviation_function()
    points = trajectory.points
    offsets = neighbour_offsets(points[0].n)
    centre = (offsets.shape[0] - 1) // 2
    violations = []
    for i in range(1, len(points) - 1):
        E, F, G = points[i - 1], points[i], points[i + 1]
        evaluator = deviation.prepare(field, E.as_array(delta), F.as_array(delta), delta)
        cand, phys = _candidates(G.time, G.spatial, offsets, delta)
        w, spacelike, _ = evaluator.evaluate(phys)
        for k in range(offsets.shape[0]):
            if w[k] < w[centre] - tolerance:
                violations.append(AuditViolation(
                    i + 1, G, LatticePoint((G.time,) + tuple(int(v) for v in cand[k])),
                    float(w[centre]), float(w[k])))
    if violations:
        solver_log.warning("audit: %d neighbours below the chosen points", len(violations))
    return violations
