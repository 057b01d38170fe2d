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
dgeo.orbit.analysis
===================

Radial and angular series of planar trajectories, apsis detection and
perihelion shift measurement

Angles are degrees in (-180, 180], distances cm, speeds fractions of c.

Functions
---------
* orbit_series - OrbitSample list of a Trajectory
* series_from_arrays - OrbitSample list from t, x, y arrays (cm)
* detect_apsides - strict local extrema of r after the starting pair
* initial_apsis - extremum made by the two starting points, if any
* theoretical_shift - (3/2) pi m (1/a + 1/p), degrees per revolution
* observed_shift - angle advance between consecutive same kind apsides
* unwrap_angle - angle difference folded into (-180, 180]
* shift_summary - observed and theoretical shifts of an apsis sequence
* alternates - whether perihelia and aphelia alternate
* swept_angles - cumulative polar angle since the first sample

Classes
-------
* OrbitSample - one point of the series
* ApsisEvent - perihelion or aphelion
"""

import warnings
from math import atan2, degrees, pi

from numpy import asarray as np_asarray
from numpy import float64 as np_float64
from numpy import sqrt as np_sqrt
from numpy import less as np_less
from numpy import greater as np_greater
from scipy.signal import argrelextrema

from dgeo.core.errors import AngleUndefined, InsufficientApsides
from dgeo.core.dg_logging import orbit_log

PERIHELION = "perihelion"
APHELION = "aphelion"


class OrbitSample(object):

    __slots__ = ('t', 'x', 'y', 'r', 'angle', 'speed')

    def __init__(self, t, x, y, r, angle, speed):
        self.t = t
        self.x = x
        self.y = y
        self.r = r
        self.angle = angle
        self.speed = speed

    def as_dict(self):
        return dict((k, getattr(self, k)) for k in self.__slots__)

    def __repr__(self):
        return "OrbitSample(%s)" % ", ".join("%s=%r" % (k, getattr(self, k)) for k in self.__slots__)


class ApsisEvent(object):

    __slots__ = ('kind', 'sample', 'index')

    def __init__(self, kind, sample, index):
        self.kind = kind
        self.sample = sample
        self.index = index

    def __repr__(self):
        return "ApsisEvent(%s, index=%d, r=%r, angle=%r)" % (
            self.kind, self.index, self.sample.r, self.sample.angle)


def _angle(x, y, index):
    if x == 0 and y == 0:
        msg = "angle undefined at the origin (sample %d)" % index
        orbit_log.warning(msg)
        warnings.warn(msg, AngleUndefined)
        return None
    return degrees(atan2(y, x))


def series_from_arrays(t, x, y):
    """Return the OrbitSample list of a planar trajectory

    t, x, y: coordinate sequences (cm), at least two samples

    The speed of a sample is the displacement to the next sample over the
    time step; the last sample reuses the previous displacement.
    """
    t = np_asarray(t, dtype=np_float64)
    x = np_asarray(x, dtype=np_float64)
    y = np_asarray(y, dtype=np_float64)
    if len(t) < 2:
        raise ValueError("an orbit series needs at least two samples")
    r = np_sqrt(x * x + y * y)
    dx = x[1:] - x[:-1]
    dy = y[1:] - y[:-1]
    speed = np_sqrt(dx * dx + dy * dy) / (t[1:] - t[:-1])
    samples = []
    for i in range(len(t)):
        v = speed[i] if i < len(speed) else speed[-1]
        samples.append(OrbitSample(float(t[i]), float(x[i]), float(y[i]), float(r[i]),
                                   _angle(float(x[i]), float(y[i]), i), float(v)))
    return samples


def orbit_series(traj):
    """Return the OrbitSample list of a 2+1 Trajectory (lattice values times
    the cell size)
    """
    P = traj.physical_array()
    if P.shape[1] != 3:
        raise ValueError("orbit analysis needs a planar trajectory, got %d space dimensions"
                         % (P.shape[1] - 1))
    return series_from_arrays(P[:, 0], P[:, 1], P[:, 2])


def _extrema(series):
    if len(series) < 3:
        return []
    r = np_asarray([s.r for s in series])
    events = [ApsisEvent(PERIHELION, series[i], int(i)) for i in argrelextrema(r, np_less)[0]]
    events += [ApsisEvent(APHELION, series[i], int(i)) for i in argrelextrema(r, np_greater)[0]]
    events.sort(key=lambda e: e.index)
    return events


def initial_apsis(series):
    """Return the ApsisEvent of sample 1 when it is a strict extremum of r,
    None otherwise

    The second sample comes from the initial velocity, not from the descent.
    """
    for e in _extrema(series):
        if e.index < 2:
            return e
    return None


def detect_apsides(series):
    """Return the ApsisEvent list of a series in sample order

    A perihelion is a strict local minimum of r, an aphelion a strict local
    maximum; plateaus and end points give no event. An extremum at the
    second sample belongs to the starting pair and is left to initial_apsis.
    """
    events = [e for e in _extrema(series) if e.index >= 2]
    for e in events:
        orbit_log.info("%s at sample %d: t = %r cm, r = %r cm, angle = %r deg",
                       e.kind, e.index, e.sample.t, e.sample.r, e.sample.angle)
    return events


def theoretical_shift(m, a, p):
    """Return the perihelion shift (3/2) pi m (1/a + 1/p) in degrees per
    revolution

    m: Schwarzschild radius (cm)
    a, p: aphelion and perihelion distances (cm)
    """
    if not (a > 0 and p > 0):
        raise ValueError("apsis distances must be positive, got a=%r p=%r" % (a, p))
    return degrees(1.5 * pi * m * (1.0 / a + 1.0 / p))


def unwrap_angle(d):
    """Return d folded into (-180, 180]"""
    d = (d + 180.0) % 360.0 - 180.0
    if d == -180.0:
        d = 180.0
    return d


def observed_shift(apsides, initial=None):
    """Return [(kind, degrees)] for every pair of consecutive apsides of the
    same kind, in the order of the later apsis

    initial: ApsisEvent of the starting pair, the baseline of the first
    apsis of its kind

    raise InsufficientApsides if no kind occurs twice
    """
    last = {}
    if initial is not None and initial.sample.angle is not None:
        last[initial.kind] = initial
    shifts = []
    for e in apsides:
        if e.sample.angle is None:
            continue
        if e.kind in last:
            shifts.append((e.kind, unwrap_angle(e.sample.angle - last[e.kind].sample.angle)))
        last[e.kind] = e
    if not shifts:
        raise InsufficientApsides("need two apsides of the same kind, got %d apsides" % len(apsides))
    return shifts


def shift_summary(apsides, m, initial=None):
    """Return a dict of the shifts of an apsis sequence

    initial: optional ApsisEvent of the starting pair (see observed_shift)

    'observed': observed_shift per aphelion pair (degrees)
    'observed_perihelion': observed_shift per perihelion pair (degrees)
    'theoretical': theoretical_shift at each aphelion preceded by a
    perihelion, from the latest distances
    """
    observed = {PERIHELION: [], APHELION: []}
    try:
        for kind, d in observed_shift(apsides, initial):
            observed[kind].append(d)
    except InsufficientApsides:
        pass
    theoretical = []
    perihelion = None
    for e in apsides:
        if e.kind == PERIHELION:
            perihelion = e
        elif perihelion is not None:
            theoretical.append(theoretical_shift(m, e.sample.r, perihelion.sample.r))
    return {'observed': observed[APHELION],
            'observed_perihelion': observed[PERIHELION],
            'theoretical': theoretical}


def alternates(apsides):
    """Return True if perihelia and aphelia alternate"""
    return all(a.kind != b.kind for a, b in zip(apsides, apsides[1:]))


def swept_angles(series):
    """Return the cumulative polar angle (degrees) swept since the first
    sample, angles undefined at the origin being carried over
    """
    swept = [0.0]
    last = series[0].angle
    for s in series[1:]:
        if s.angle is None or last is None:
            swept.append(swept[-1])
            last = s.angle if s.angle is not None else last
            continue
        swept.append(swept[-1] + unwrap_angle(s.angle - last))
        last = s.angle
    return swept
