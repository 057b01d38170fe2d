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
dgeo.core.metrics
=================

Metric fields: discretized Schwarzschild in 2+1 dimensions and flat Minkowski
in any dimension

The fields are defined on continuous positions in cm; lattice callers scale
by the cell size first.

Functions
---------
* schwarzschild_metric - Schwarzschild tensor at one point
* minkowski_metric - diag(1,-1,...,-1)
* schwarzschild_radius_from_mass - m = 2GM/c^2 in cm

Classes
-------
* SchwarzschildParams - mass parameter of the Schwarzschild field
* MetricField - base class of metric field implementations
* SchwarzschildField - static field of a point mass, 2+1 dimensions
* MinkowskiField - flat field
"""

from numpy import zeros as np_zeros
from numpy import sqrt as np_sqrt
from numpy import argmax as np_argmax
from numpy import atleast_2d as np_atleast_2d
from numpy import asarray as np_asarray
from numpy import float64 as np_float64
from numpy import isfinite as np_isfinite
from numpy import inf as np_inf

from astropy import constants as const
from astropy import units as u

from dgeo.core.errors import MetricSingularity
from dgeo.core.geometry import MetricTensor, as_coords
import dgeo.core.prefs as prefs


def schwarzschild_radius_from_mass(mass_kg):
    """Return the Schwarzschild radius 2GM/c^2 in cm

    mass_kg: mass in kg
    """
    m = 2 * const.G * (mass_kg * u.kg) / const.c ** 2
    return float(m.to(u.cm).value)


class SchwarzschildParams(object):

    """m: Schwarzschild radius in cm (m = 2GM/c^2, c = 1)"""

    __slots__ = ('m',)

    def __init__(self, m):
        m = float(m)
        if not (m > 0 and np_isfinite(m)):
            raise ValueError("Schwarzschild radius must be positive and finite, got %r" % (m,))
        self.m = m

    @classmethod
    def from_mass(cls, mass_kg):
        return cls(schwarzschild_radius_from_mass(mass_kg))

    def __repr__(self):
        return "SchwarzschildParams(m=%r)" % (self.m,)


class MetricField(object):

    """Base class of metric field implementations

    *Class variables*
    * name - name used in run configurations
    * description - one line description
    * def_params - dictionary of parameters: (default, min, max)
    * is_exec - whether the field is offered by get_implementations

    *Methods*
    * get_implementations - return the available fields
    * from_name - build the field registered under name
    * get_params - return the dictionary of the current parameters
    * tensors - tensors at a batch of points (TO BE OVERRIDDEN)
    * in_domain - domain predicate (TO BE OVERRIDDEN)
    * perturbations - tensors minus the flat diag(1,-1,...,-1)
    * tensor - tensor at one point as a numpy array
    * metric - tensor at one point as a MetricTensor
    * default_step - finite difference step for metric derivatives
    """

    name = ""
    description = ""
    def_params = {}
    is_exec = False

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.def_params)
        if unknown:
            raise ValueError("unknown parameters for metric %s: %s"
                             % (self.name, ", ".join(sorted(unknown))))
        self.params = dict((k, v[0]) for k, v in self.def_params.items())
        self.params.update(kwargs)
        for k, value in self.params.items():
            low, high = self.def_params[k][1:]
            if not low <= value <= high:
                raise ValueError("parameter %s = %r outside [%r, %r]" % (k, value, low, high))
        self.__dict__.update(self.params)

    @classmethod
    def get_implementations(cls):
        """Return the subclasses flagged as executable"""
        implementations = cls.__subclasses__() + [g for s in cls.__subclasses__()
                                                  for g in s.get_implementations()]
        return [impl for impl in implementations if impl.is_exec]

    @classmethod
    def from_name(cls, name, **params):
        for impl in cls.get_implementations():
            if impl.name == name:
                return impl(**params)
        raise ValueError("unknown metric %r (available: %s)"
                         % (name, ", ".join(i.name for i in cls.get_implementations())))

    def get_params(self):
        return self.params

    @property
    def n(self):
        """Number of spatial dimensions"""
        raise NotImplementedError

    def tensors(self, points):
        """Return an array (k, n+1, n+1) of tensors at the points (k, n+1), cm"""
        raise NotImplementedError

    def perturbations(self, points):
        """Return tensors minus diag(1,-1,...,-1) at the points (k, n+1), cm.
        Fields override this when the departure from flat can be computed
        without forming the full tensor first.
        """
        g = self.tensors(points)
        g[:, 0, 0] -= 1.0
        for i in range(1, g.shape[-1]):
            g[:, i, i] += 1.0
        return g

    def in_domain(self, P, delta=1.0):
        return True

    def tensor(self, P):
        return self.tensors(np_asarray(P, dtype=np_float64)[None, :])[0]

    def metric(self, P, delta=1.0):
        """Return the MetricTensor at P (LatticePoint scaled by delta,
        ContinuousPoint or coordinates in cm)
        """
        return MetricTensor(self.tensor(as_coords(P, delta)))

    def default_step(self, P):
        return prefs.FLAT_STEP_CM

    def _check_points(self, points):
        points = np_atleast_2d(np_asarray(points, dtype=np_float64))
        if points.shape[-1] != self.n + 1:
            raise ValueError("%s metric expects %d coordinates, got %d"
                             % (self.name, self.n + 1, points.shape[-1]))
        return points

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__,
                           ", ".join("%s=%r" % kv for kv in sorted(self.params.items())))


class SchwarzschildField(MetricField):

    """Static field of a point mass in 2+1 dimensions

    g_tt = 1 - m/r
    g_xx = -x^2/(r(r-m)) - y^2/r^2
    g_xy = -m x y/(r^2 (r-m))
    g_yy = -x^2/r^2 - y^2/(r(r-m))

    defined for r > m only
    """

    name = "schwarzschild"
    description = "Schwarzschild field of a point mass at the origin, 2+1 dimensions"
    def_params = {'m': (3e5, 0.0, np_inf)}
    is_exec = True

    def __init__(self, **kwargs):
        super(SchwarzschildField, self).__init__(**kwargs)
        self.m = SchwarzschildParams(self.m).m

    @property
    def n(self):
        return 2

    def tensors(self, points):
        points = self._check_points(points)
        m = self.m
        x = points[:, 1]
        y = points[:, 2]
        r = np_sqrt(x * x + y * y)
        outside = r > m
        if not outside.all():
            k = int(np_argmax(~outside))
            raise MetricSingularity(float(r[k]), m, tuple(points[k]))
        r2 = r * r
        rm = r * (r - m)
        g = np_zeros((points.shape[0], 3, 3))
        g[:, 0, 0] = 1 - m / r
        g[:, 1, 1] = -x * x / rm - y * y / r2
        g[:, 1, 2] = -m * x * y / (r2 * (r - m))
        g[:, 2, 1] = g[:, 1, 2]
        g[:, 2, 2] = -x * x / r2 - y * y / rm
        return g

    def perturbations(self, points):
        """h_tt = -m/r, h_ij = -m x_i x_j/(r^2 (r-m))"""
        points = self._check_points(points)
        m = self.m
        x = points[:, 1]
        y = points[:, 2]
        r = np_sqrt(x * x + y * y)
        if not (r > m).all():
            k = int(np_argmax(~(r > m)))
            raise MetricSingularity(float(r[k]), m, tuple(points[k]))
        c = -m / (r * r * (r - m))
        h = np_zeros((points.shape[0], 3, 3))
        h[:, 0, 0] = -m / r
        h[:, 1, 1] = c * x * x
        h[:, 1, 2] = c * x * y
        h[:, 2, 1] = h[:, 1, 2]
        h[:, 2, 2] = c * y * y
        return h

    def in_domain(self, P, delta=1.0):
        p = as_coords(P, delta)
        return bool(np_sqrt(p[1] * p[1] + p[2] * p[2]) > self.m)

    def default_step(self, P):
        p = as_coords(P)
        return prefs.SCHWARZSCHILD_STEP_FRACTION * float(np_sqrt(p[1] * p[1] + p[2] * p[2]))


class MinkowskiField(MetricField):

    """Flat field diag(1, -1, ..., -1), n spatial dimensions"""

    name = "minkowski"
    description = "Flat spacetime"
    def_params = {'n': (2, 1, np_inf)}
    is_exec = True

    def __init__(self, **kwargs):
        super(MinkowskiField, self).__init__(**kwargs)
        self.params['n'] = int(self.params['n'])

    @property
    def n(self):
        return self.params['n']

    def tensors(self, points):
        points = self._check_points(points)
        g = np_zeros((points.shape[0], self.n + 1, self.n + 1))
        g[:, 0, 0] = 1.0
        for i in range(1, self.n + 1):
            g[:, i, i] = -1.0
        return g

    def perturbations(self, points):
        points = self._check_points(points)
        return np_zeros((points.shape[0], self.n + 1, self.n + 1))


def schwarzschild_metric(params, P, delta=1.0):
    """Return the Schwarzschild MetricTensor at P

    params: SchwarzschildParams (or the radius m in cm)
    P: LatticePoint (scaled by delta), ContinuousPoint or coordinates in cm
    """
    m = params.m if isinstance(params, SchwarzschildParams) else params
    return SchwarzschildField(m=m).metric(P, delta)


def minkowski_metric(n, P=None):
    """Return the flat MetricTensor of n spatial dimensions"""
    return MetricTensor(MinkowskiField(n=n).tensors(np_zeros((1, n + 1)))[0])
