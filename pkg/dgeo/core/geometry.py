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
dgeo.core.geometry
==================

Lattice and continuous spacetime points, metric tensors, proper intervals,
the three point length and the distance induced deviation functions

Conventions: index 0 is time, signature (+,-,...,-), c = 1 and every length
(time included) is measured in centimeters. A lattice coordinate is an integer
number of cells of size delta cm.

Functions
---------
* quadratic_form - D' g D for stacked tensors and displacements
* proper_interval - d(E,F) = sqrt(EF' g EF) with g given by the caller
* three_point_length - l(E,F,G) = d(E,F) + d(F,G), d(P,Q) using g(P)
* deviation_discrete - squared finite differences of l, one lattice cell probes
* deviation_continuous - squared central derivatives of l, probes eta*l(E,F,G)
* deviation - deviation of one triple for any DeviationFunction
* resolve_axes - axis set from 'all', 'spatial' or an explicit sequence

Classes
-------
* LatticePoint - integer spacetime coordinates
* ContinuousPoint - real spacetime coordinates (cm)
* Displacement - vector between two points (cm)
* MetricTensor - symmetric (n+1)x(n+1) tensor
* ProbeSet - metric and first segment lengths at the probes F +- step e_mu
* DeviationFunction - deviation interface used by the solver
* DistanceDeviation - deviation induced by the proper interval
* UserDeviation - wrap a plain w(field, E, F, G) callable
"""

import operator

from numpy import array as np_array
from numpy import asarray as np_asarray
from numpy import repeat as np_repeat
from numpy import sqrt as np_sqrt
from numpy import where as np_where
from numpy import isfinite as np_isfinite
from numpy import atleast_2d as np_atleast_2d
from numpy import empty as np_empty
from numpy import zeros as np_zeros
from numpy import inf as np_inf
from numpy import float64 as np_float64
from numpy.linalg import det as np_det
from numpy.linalg import inv as np_inv

from dgeo.core.errors import (RangeOverflow, SpacelikeStep, ZeroLength,
                              GeodesicError)
import dgeo.core.prefs as prefs

INT64_MIN = -2**63
INT64_MAX = 2**63 - 1


class LatticePoint(object):

    """Integer spacetime coordinates <x_0, x_1, ..., x_n>, x_0 being time,
    in units of lattice cells
    """

    __slots__ = ('coords',)

    def __init__(self, coords):
        values = []
        for c in coords:
            try:
                v = operator.index(c)
            except TypeError:
                raise TypeError("lattice coordinates must be integers, got %r" % (c,))
            if v < INT64_MIN or v > INT64_MAX:
                raise RangeOverflow("lattice coordinate %d outside the int64 range" % v)
            values.append(v)
        if len(values) < 2:
            raise ValueError("a lattice point needs a time and at least one space coordinate")
        self.coords = tuple(values)

    @property
    def time(self):
        return self.coords[0]

    @property
    def spatial(self):
        return self.coords[1:]

    @property
    def n(self):
        """Number of spatial dimensions"""
        return len(self.coords) - 1

    def physical(self, delta):
        """Return the ContinuousPoint of this lattice point for a cell of
        delta cm
        """
        return ContinuousPoint([c * delta for c in self.coords])

    def as_array(self, delta=1.0):
        return np_array(self.coords, dtype=np_float64) * delta

    def shifted(self, axis, k=1):
        coords = list(self.coords)
        coords[axis] += k
        return LatticePoint(coords)

    def __add__(self, other):
        return LatticePoint([a + b for a, b in zip(self.coords, tuple(other))])

    def __sub__(self, other):
        return tuple(a - b for a, b in zip(self.coords, tuple(other)))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, LatticePoint):
            return self.coords == other.coords
        return NotImplemented

    def __ne__(self, other):
        res = self.__eq__(other)
        return res if res is NotImplemented else not res

    def __lt__(self, other):
        return self.coords < other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "LatticePoint(%r)" % (self.coords,)


class ContinuousPoint(object):

    """Real spacetime coordinates in cm (time first)"""

    __slots__ = ('coords',)

    def __init__(self, coords):
        coords = tuple(float(c) for c in coords)
        if not all(np_isfinite(coords)):
            raise ValueError("non finite coordinate in %r" % (coords,))
        self.coords = coords

    def as_array(self):
        return np_array(self.coords, dtype=np_float64)

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if isinstance(other, ContinuousPoint):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "ContinuousPoint(%r)" % (self.coords,)


class Displacement(object):

    """Vector EF between two points, components in cm"""

    __slots__ = ('components',)

    def __init__(self, components):
        components = np_array(components, dtype=np_float64)
        if not np_isfinite(components).all():
            raise ValueError("non finite displacement %r" % (components,))
        self.components = components

    @classmethod
    def between(cls, E, F):
        return cls(as_coords(F) - as_coords(E))

    def __repr__(self):
        return "Displacement(%r)" % (tuple(self.components),)


class MetricTensor(object):

    """Symmetric (n+1)x(n+1) metric tensor, signature (+,-,...,-)

    *Methods*
    * as_array - read only numpy view of the entries
    * inverse - inverse tensor (numpy array)
    * determinant
    """

    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = np_array(entries, dtype=np_float64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError("metric tensor must be square, got shape %r" % (entries.shape,))
        if not (entries == entries.T).all():
            raise ValueError("metric tensor is not symmetric")
        entries.setflags(write=False)
        self.entries = entries

    @property
    def dimension(self):
        return self.entries.shape[0]

    def as_array(self):
        return self.entries

    def determinant(self):
        return float(np_det(self.entries))

    def inverse(self):
        return np_inv(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __repr__(self):
        return "MetricTensor(%r)" % (self.entries.tolist(),)


def as_coords(P, delta=1.0):
    """Return the physical coordinates (cm) of P as a float numpy array

    P: LatticePoint (scaled by delta), ContinuousPoint, or sequence of cm
    """
    if isinstance(P, LatticePoint):
        return P.as_array(delta)
    if isinstance(P, ContinuousPoint):
        return P.as_array()
    return np_asarray(P, dtype=np_float64)


def _tensor_array(g):
    if isinstance(g, MetricTensor):
        return g.entries
    return np_asarray(g, dtype=np_float64)


def quadratic_form(g, D):
    """Return D' g D

    g: tensors of shape (..., N, N)
    D: displacements of shape (..., N), broadcastable against g

    The sum runs in a fixed order, element by element, so the value of one
    entry does not depend on the batch it is computed in.
    """
    n1 = D.shape[-1]
    q = 0.0
    for i in range(n1):
        gd = g[..., i, 0] * D[..., 0]
        for j in range(1, n1):
            gd = gd + g[..., i, j] * D[..., j]
        q = q + D[..., i] * gd
    return q


def _row(g, mu, D):
    """Return (g D)_mu, summed in a fixed order like quadratic_form"""
    res = g[..., mu, 0] * D[..., 0]
    for j in range(1, D.shape[-1]):
        res = res + g[..., mu, j] * D[..., j]
    return res


def _ratio(num, den):
    """Return num/den, 0 where den = 0 (both lengths zero)"""
    den = np_asarray(den)
    return np_where(den > 0, num / np_where(den > 0, den, 1.0), 0.0)


def proper_interval(g, E, F):
    """Return d(E,F) = sqrt(EF' g EF) in cm of proper time

    g: MetricTensor (or array), evaluated at E by the caller
    E, F: ContinuousPoint or coordinates in cm

    raise SpacelikeStep if EF' g EF < 0
    """
    D = as_coords(F) - as_coords(E)
    q = float(quadratic_form(_tensor_array(g), D))
    if q < 0:
        raise SpacelikeStep(q, "segment %r -> %r" % (tuple(as_coords(E)), tuple(as_coords(F))))
    return float(np_sqrt(q))


def three_point_length(field, E, F, G):
    """Return l(E,F,G) = d(E,F) + d(F,G), each segment measured with the
    metric at its first point

    field: dgeo.core.metrics.MetricField
    E, F, G: ContinuousPoint or coordinates in cm
    """
    e = as_coords(E)
    f = as_coords(F)
    return proper_interval(field.tensor(e), e, f) + \
        proper_interval(field.tensor(f), f, as_coords(G))


def resolve_axes(axes, n1):
    """Return a sorted tuple of axis indices

    axes: None or 'all' (every axis, time included), 'spatial', or a sequence
    n1: number of coordinates (n+1)
    """
    if axes is None or axes == 'all':
        return tuple(range(n1))
    if axes == 'spatial':
        return tuple(range(1, n1))
    res = tuple(sorted(set(int(mu) for mu in axes)))
    if not res or res[0] < 0 or res[-1] >= n1:
        raise ValueError("axes %r not a non empty subset of 0..%d" % (axes, n1 - 1))
    return res


class ProbeSet(object):

    """Evaluate the distance induced deviation of (E, F, G) for many G

    The metric at the probes F +- step e_mu and the lengths d(E, F +- step e_mu)
    do not depend on the third point: they are computed once at construction.

    Each central difference d_- - d_+ is taken as (q_- - q_+)/(d_- + d_+), the
    difference of the quadratic forms being expanded in closed form. Subtracting
    two lengths of a run with small cells would leave only round-off.

    *Methods*
    * __init__ - evaluate the probes (MetricSingularity, SpacelikeStep propagate)
    * evaluate - deviation and spacelike mask for a batch of third points
    * probe_label - human readable name of a probe
    """

    def __init__(self, field, E, F, axes, step, divisor):
        """
        field: MetricField
        E, F: coordinates in cm (numpy arrays)
        axes: tuple of axis indices
        step: probe offset in cm
        divisor: denominator of each central difference
        """
        self.E = np_asarray(E, dtype=np_float64)
        self.F = np_asarray(F, dtype=np_float64)
        self.axes = tuple(axes)
        self.step = step
        self.divisor = divisor

        probes = np_repeat(self.F[None, :], 2 * len(self.axes), axis=0)
        for k, mu in enumerate(self.axes):
            probes[2 * k, mu] -= step
            probes[2 * k + 1, mu] += step
        self.probes = probes
        self.g_probes = field.tensors(probes)
        h_probes = field.perturbations(probes)

        g_E = field.tensor(self.E)
        q_first = quadratic_form(g_E, probes - self.E[None, :])
        for p in range(probes.shape[0]):
            if q_first[p] < 0:
                raise SpacelikeStep(float(q_first[p]), "segment E -> " + self.probe_label(p))
        self.d_first = np_sqrt(q_first)

        # q(D - s e_mu) - q(D + s e_mu) = -4 s (g D)_mu, D = F - E
        D = self.F - self.E
        self.first_diff = []
        self.g_sum = []
        self.h_diff = []
        for k, mu in enumerate(self.axes):
            dq = -4.0 * step * _row(g_E, mu, D)
            self.first_diff.append(_ratio(dq, self.d_first[2 * k] + self.d_first[2 * k + 1]))
            self.g_sum.append(self.g_probes[2 * k] + self.g_probes[2 * k + 1])
            self.h_diff.append(h_probes[2 * k] - h_probes[2 * k + 1])

    def probe_label(self, p):
        return "F%se_%d" % ('-' if p % 2 == 0 else '+', self.axes[p // 2])

    def evaluate(self, points):
        """Return (w, spacelike, q) for a batch of third points

        points: array (k, N) of coordinates in cm
        w: deviation per point, +inf where some probe segment is spacelike
        spacelike: boolean mask of the excluded points
        q: quadratic forms of the second segments, shape (2*len(axes), k)
        """
        points = np_atleast_2d(np_asarray(points, dtype=np_float64))
        D = points[None, :, :] - self.probes[:, None, :]
        q = quadratic_form(self.g_probes[:, None, :, :], D)
        neg = q < 0
        spacelike = neg.any(axis=0)
        d_second = np_sqrt(np_where(neg, 0.0, q))
        H = points - self.F[None, :]
        s = self.step
        w = np_zeros(points.shape[0])
        for k, mu in enumerate(self.axes):
            dh = self.h_diff[k]
            # q(H + s e_mu; g_-) - q(H - s e_mu; g_+)
            dq = quadratic_form(dh, H) + 2.0 * s * _row(self.g_sum[k], mu, H) + s * s * dh[mu, mu]
            diff = (self.first_diff[k] + _ratio(dq, d_second[2 * k] + d_second[2 * k + 1])) \
                / self.divisor
            w = w + diff * diff
        w[spacelike] = np_inf
        return w, spacelike, q

    def evaluate_one(self, G):
        """Return the deviation at one third point, raising SpacelikeStep
        with the name of the failing probe
        """
        w, spacelike, q = self.evaluate(np_asarray(G, dtype=np_float64)[None, :])
        if spacelike[0]:
            for p in range(q.shape[0]):
                if q[p, 0] < 0:
                    raise SpacelikeStep(float(q[p, 0]), "segment " + self.probe_label(p) + " -> G")
        return float(w[0])


def deviation_discrete(field, E, F, G, axes=None, delta=1.0):
    """Return sum over axes of [(l(E,F-e_mu,G) - l(E,F+e_mu,G))/2]^2, e_mu
    being one lattice cell along axis mu

    field: MetricField
    E, F, G: LatticePoint
    axes: 'all' (default), 'spatial' or a sequence of axis indices
    delta: cell size in cm

    The degenerate triple E = F = G has deviation 0.
    """
    axes = resolve_axes(axes, len(F))
    if tuple(E) == tuple(F) == tuple(G):
        return 0.0
    probes = ProbeSet(field, as_coords(E, delta), as_coords(F, delta),
                      axes, delta, 2.0)
    return probes.evaluate_one(as_coords(G, delta))


def deviation_continuous(field, E, F, G, eta=prefs.DEFAULT_ETA, axes=None, h=None):
    """Return the sum over axes of the squared central derivatives of l with
    respect to the middle point, the probe step being h = eta*l(E,F,G)

    field: MetricField
    E, F, G: ContinuousPoint or coordinates in cm
    eta: probe step as a fraction of l(E,F,G)
    h: explicit probe step in cm (overrides eta)

    raise ZeroLength if l(E,F,G) = 0 and no explicit h is given
    """
    e = as_coords(E)
    f = as_coords(F)
    g = as_coords(G)
    if h is None:
        if not 0 < eta:
            raise ValueError("eta must be positive, got %r" % (eta,))
        length = three_point_length(field, e, f, g)
        if length == 0:
            raise ZeroLength("l(E,F,G) = 0: no scale for the probe step")
        h = eta * length
    axes = resolve_axes(axes, len(f))
    probes = ProbeSet(field, e, f, axes, h, 2.0 * h)
    return probes.evaluate_one(g)


class DeviationFunction(object):

    """Deviation interface used by the solver

    *Methods*
    * prepare - return an object whose evaluate(points) gives (w, spacelike)
      for a batch of third points, E and F being fixed
    * __call__ - deviation of one triple (lattice points)
    """

    name = ""
    description = ""

    def prepare(self, field, E, F, delta):
        raise NotImplementedError

    def __call__(self, field, E, F, G, delta=1.0):
        return self.prepare(field, as_coords(E, delta), as_coords(F, delta),
                            delta).evaluate_one(as_coords(G, delta))


class DistanceDeviation(DeviationFunction):

    """Deviation induced by the proper interval (finite difference form)"""

    name = "distance"
    description = "Squared finite differences of l(E,F,G) over the middle point"

    def __init__(self, axes=None):
        self.axes = axes

    def prepare(self, field, E, F, delta):
        return ProbeSet(field, E, F, resolve_axes(self.axes, len(F)), delta, 2.0)


class _PointwiseEvaluator(object):

    def __init__(self, func, field, E, F, delta):
        self.func = func
        self.field = field
        self.E = E
        self.F = F
        self.delta = delta

    def evaluate(self, points):
        points = np_atleast_2d(points)
        w = np_empty(points.shape[0])
        spacelike = w != w
        for k in range(points.shape[0]):
            try:
                w[k] = self.func(self.field, self.E, self.F, points[k])
            except SpacelikeStep:
                w[k] = np_inf
                spacelike[k] = True
        return w, spacelike, None

    def evaluate_one(self, G):
        return float(self.func(self.field, self.E, self.F, G))


class UserDeviation(DeviationFunction):

    """Wrap a callable w(field, E, F, G) -> float taking coordinates in cm.
    A SpacelikeStep raised by the callable excludes the candidate.
    """

    name = "user"

    def __init__(self, func, name=None):
        self.func = func
        if name:
            self.name = name

    def prepare(self, field, E, F, delta):
        return _PointwiseEvaluator(self.func, field, E, F, delta)


def deviation(field, E, F, G, function=None, delta=1.0):
    """Return w(E,F,G) for any DeviationFunction

    function: DeviationFunction (default the distance induced one, all axes)
    delta: cell size in cm when the points are LatticePoint
    """
    if function is None:
        function = DistanceDeviation()
    return function(field, E, F, G, delta)
