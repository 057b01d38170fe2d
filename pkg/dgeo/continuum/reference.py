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
dgeo.continuum.reference
========================

Continuum limit of the lattice geodesics: Christoffel symbols from finite
differences of the metric, the first order velocity update and a 4th order
Runge-Kutta integrator of the geodesic equation

    d2x/ds2 = -Gamma^l_mn dx^m/ds dx^n/ds

s is the proper time in cm; velocities v = dx/ds are dimensionless.

Functions
---------
* metric_partials - dg[l] = d g / d x^l by central differences
* christoffel - Christoffel symbols at a point
* step_T1 - v' = v - eps Gamma(v,v), x' = x + eps v'
* step_frozen_metric - v' = g(F)^-1 g(E) v (variation of g around F ignored)
* rk4_step - one classical Runge-Kutta step of the geodesic equation
* integrate_geodesic_ode - integrate over a proper time span
* integrate_to_time - integrate until the coordinate time reaches t_end
* sample_timeline - positions at given coordinate times (Hermite splines)
* velocity_norm - v' g v
* conserved_quantities - energy and angular momentum of a static planar field
* initial_state - normalized state from a coordinate velocity
* lattice_initial_state - state matching two starting lattice points
* position_differences - lattice against ODE positions on a timeline

Classes
-------
* ChristoffelAtPoint - symmetric Gamma[l, m, n] (1/cm)
* PhaseState - position, velocity and proper time
"""

from numpy import asarray as np_asarray
from numpy import array as np_array
from numpy import empty as np_empty
from numpy import zeros as np_zeros
from numpy import einsum as np_einsum
from numpy import sqrt as np_sqrt
from numpy import float64 as np_float64
from numpy import searchsorted as np_searchsorted
from numpy import hypot as np_hypot
from numpy import errstate as np_errstate
from numpy import nan as np_nan
from numpy.linalg import cond as np_cond
from numpy.linalg import inv as np_inv
from numpy.linalg import solve as np_solve
from scipy.interpolate import CubicHermiteSpline
from scipy.optimize import brentq

from dgeo.core.errors import (SingularMetricInversion, NormDriftExceeded,
                              SpacelikeStep, GeodesicError)
from dgeo.core.geometry import as_coords, quadratic_form
from dgeo.core.dg_logging import solver_log
import dgeo.core.prefs as prefs


class ChristoffelAtPoint(object):

    """Christoffel symbols Gamma[l, m, n], symmetric in (m, n)

    *Methods*
    * contract - Gamma^l(v, v)
    """

    __slots__ = ('gamma',)

    def __init__(self, gamma):
        gamma = np_array(gamma, dtype=np_float64)
        gamma = 0.5 * (gamma + gamma.transpose(0, 2, 1))
        gamma.setflags(write=False)
        self.gamma = gamma

    def contract(self, v):
        return np_einsum('lmn,m,n->l', self.gamma, v, v)

    def __getitem__(self, index):
        return self.gamma[index]


class PhaseState(object):

    """x: position (cm), v: dx/ds, s: proper time (cm)"""

    __slots__ = ('x', 'v', 's')

    def __init__(self, x, v, s=0.0):
        self.x = np_array(as_coords(x), dtype=np_float64)
        self.v = np_array(v, dtype=np_float64)
        self.s = float(s)

    @property
    def t(self):
        return float(self.x[0])

    def __repr__(self):
        return "PhaseState(x=%r, v=%r, s=%r)" % (tuple(self.x), tuple(self.v), self.s)


def _step(field, P, h):
    return field.default_step(P) if h is None else h


def metric_partials(field, P, h=None):
    """Return dg, array (N, N, N), dg[l] = (g(P + h e_l) - g(P - h e_l))/(2h)

    field: MetricField
    P: ContinuousPoint or coordinates in cm
    h: probe step in cm (default field.default_step(P))

    The flat part of g cancels exactly, so the differences are taken on
    field.perturbations.
    """
    P = as_coords(P)
    h = _step(field, P, h)
    if not h > 0:
        raise ValueError("finite difference step must be positive, got %r" % (h,))
    n1 = P.shape[0]
    probes = np_empty((2 * n1, n1))
    probes[:] = P
    for l in range(n1):
        probes[2 * l, l] += h
        probes[2 * l + 1, l] -= h
    dh = field.perturbations(probes)
    return (dh[0::2] - dh[1::2]) / (2 * h)


def _inverse(g):
    if np_cond(g) > prefs.SINGULAR_CONDITION:
        raise SingularMetricInversion("metric tensor not invertible: condition number %r"
                                      % (float(np_cond(g)),))
    return np_inv(g)


def christoffel(field, P, h=None):
    """Return the ChristoffelAtPoint at P

    Gamma^l_mn = sum_k ginv[l, k] (g_kn,m + g_km,n - g_mn,k) / 2

    raise SingularMetricInversion if g(P) is not invertible to working precision
    """
    P = as_coords(P)
    dg = metric_partials(field, P, h)
    ginv = _inverse(field.tensor(P))
    lowered = dg.transpose(1, 0, 2) + dg.transpose(1, 2, 0) - dg
    return ChristoffelAtPoint(0.5 * np_einsum('lk,kmn->lmn', ginv, lowered))


def geodesic_acceleration(field, x, v, h=None):
    """Return d2x/ds2 = -Gamma(x)(v, v)"""
    return -christoffel(field, x, h).contract(v)


def velocity_norm(field, state):
    return float(quadratic_form(field.tensor(state.x), state.v))


def step_T1(field, state, eps, h=None):
    """Return the state after one first order step of proper time eps

    v' = v - eps Gamma(x)(v, v); x' = x + eps v'
    """
    if eps < 0:
        raise ValueError("step must be non negative, got %r" % (eps,))
    if eps == 0:
        return PhaseState(state.x, state.v, state.s)
    v = state.v + eps * geodesic_acceleration(field, state.x, state.v, h)
    return PhaseState(state.x + eps * v, v, state.s + eps)


def step_frozen_metric(field, state, eps):
    """Return the state after one step keeping g(F) v' = g(E) v, the update
    obtained when the variation of the metric around F is dropped

    F = x + eps v
    """
    F = state.x + eps * state.v
    v = np_solve(field.tensor(F), field.tensor(state.x).dot(state.v))
    return PhaseState(F, v, state.s + eps)


def rk4_step(field, state, ds, h=None):
    """Return the state after one classical Runge-Kutta step of size ds"""
    x = state.x
    v = state.v
    k1x = ds * v
    k1v = ds * geodesic_acceleration(field, x, v, h)
    k2x = ds * (v + 0.5 * k1v)
    k2v = ds * geodesic_acceleration(field, x + 0.5 * k1x, v + 0.5 * k1v, h)
    k3x = ds * (v + 0.5 * k2v)
    k3v = ds * geodesic_acceleration(field, x + 0.5 * k2x, v + 0.5 * k2v, h)
    k4x = ds * (v + k3v)
    k4v = ds * geodesic_acceleration(field, x + k3x, v + k3v, h)
    return PhaseState(x + (k1x + 2 * k2x + 2 * k3x + k4x) / 6.0,
                      v + (k1v + 2 * k2v + 2 * k3v + k4v) / 6.0,
                      state.s + ds)


def _check_norm(field, state, tolerance):
    drift = abs(velocity_norm(field, state) - 1.0)
    if drift > tolerance:
        raise NormDriftExceeded(state.s, drift, tolerance)


def integrate_geodesic_ode(field, state0, total_s, ds, h=None,
                           norm_tol=prefs.DEFAULT_NORM_TOLERANCE):
    """Return the list of states from state0 over a proper time span

    field: MetricField
    state0: PhaseState with v'gv = 1
    total_s: proper time span (cm)
    ds: step (cm); the last step is shortened to end on total_s
    h: metric derivative step (default field.default_step at each point)
    norm_tol: allowed drift of v'gv

    raise NormDriftExceeded when the drift leaves the tolerance band
    """
    if not ds > 0:
        raise ValueError("integration step must be positive, got %r" % (ds,))
    if total_s < 0:
        raise ValueError("proper time span must be non negative, got %r" % (total_s,))
    _check_norm(field, state0, norm_tol)
    n_full = int(total_s // ds)
    steps = [ds] * n_full
    if total_s - n_full * ds > 1e-12 * ds:
        steps.append(total_s - n_full * ds)
    states = [state0]
    for step in steps:
        state = rk4_step(field, states[-1], step, h)
        _check_norm(field, state, norm_tol)
        states.append(state)
    return states


def integrate_to_time(field, state0, t_end, ds, h=None,
                      norm_tol=prefs.DEFAULT_NORM_TOLERANCE):
    """Return the list of states from state0 until the coordinate time of
    the last state reaches t_end

    Errors carry the index of the failing integration step.
    """
    if not ds > 0:
        raise ValueError("integration step must be positive, got %r" % (ds,))
    _check_norm(field, state0, norm_tol)
    states = [state0]
    while states[-1].t < t_end:
        try:
            state = rk4_step(field, states[-1], ds, h)
            _check_norm(field, state, norm_tol)
        except GeodesicError as err:
            err.step_index = len(states)
            raise
        states.append(state)
    solver_log.info("ODE: %d steps of %r cm up to t = %r cm", len(states) - 1, ds, states[-1].t)
    return states


def sample_timeline(states, times):
    """Return an array (len(times), N) of positions at the coordinate times

    x(s) is a cubic Hermite spline through the states (derivatives v); the
    proper time of each sample solves x^0(s) = t.

    states: PhaseState list with increasing coordinate time
    times: coordinate times within the span of the states
    """
    s = np_array([st.s for st in states])
    x = np_array([st.x for st in states])
    v = np_array([st.v for st in states])
    spline = CubicHermiteSpline(s, x, v, axis=0)
    t_states = x[:, 0]
    res = np_empty((len(times), x.shape[1]))
    for k, t in enumerate(times):
        if t < t_states[0] or t > t_states[-1]:
            raise ValueError("time %r outside the integrated span [%r, %r]"
                             % (t, t_states[0], t_states[-1]))
        j = int(np_searchsorted(t_states, t))
        if t_states[j] == t:
            res[k] = x[j]
            continue
        s_k = brentq(lambda sv: spline(sv)[0] - t, s[j - 1], s[j], xtol=1e-12 * max(1.0, abs(s[j])))
        res[k] = spline(s_k)
        res[k, 0] = t
    return res


def conserved_quantities(field, state):
    """Return (E, L) for a static field invariant under rotations of the x-y
    plane: E = (g v)_t and L = x (g v)_y - y (g v)_x
    """
    p = field.tensor(state.x).dot(state.v)
    return float(p[0]), float(state.x[1] * p[2] - state.x[2] * p[1])


def initial_state(field, P, coordinate_velocity):
    """Return the PhaseState at P moving with dx/dt = coordinate_velocity,
    normalized to v'gv = 1

    raise SpacelikeStep if the direction is not timelike at P
    """
    P = as_coords(P)
    u = np_zeros(P.shape[0])
    u[0] = 1.0
    u[1:] = coordinate_velocity
    q = float(quadratic_form(field.tensor(P), u))
    if not q > 0:
        raise SpacelikeStep(q, "initial velocity %r" % (tuple(u),))
    return PhaseState(P, u / np_sqrt(q), 0.0)


def lattice_initial_state(field, E0, E1, delta):
    """Return the PhaseState at E0 matching the lattice start (E0, E1)

    (E1 - E0)/tau is the coordinate velocity half a step after E0; it is
    taken back by the coordinate acceleration times tau/2.
    """
    P0 = as_coords(E0, delta)
    P1 = as_coords(E1, delta)
    tau = P1[0] - P0[0]
    u = (P1 - P0) / tau
    gamma = christoffel(field, P0)
    a = -gamma.contract(u)
    coordinate_acc = a[1:] - a[0] * u[1:]
    return initial_state(field, P0, u[1:] - coordinate_acc * tau / 2.0)


def position_differences(lattice_xy, ode_xy, delta):
    """Return (distance_cm, distance_cells, relative) arrays comparing two
    sequences of spatial positions (cm). The longer one is truncated.

    relative: distance over the radius of the lattice position
    """
    n = min(len(lattice_xy), len(ode_xy))
    lat = np_asarray(lattice_xy, dtype=np_float64)[:n]
    ode = np_asarray(ode_xy, dtype=np_float64)[:n]
    d = np_sqrt(((lat - ode) ** 2).sum(axis=1))
    r = np_hypot(lat[:, 0], lat[:, 1])
    with np_errstate(divide="ignore", invalid="ignore"):
        relative = d / r
    relative[r == 0] = np_nan
    return d, d / delta, relative
