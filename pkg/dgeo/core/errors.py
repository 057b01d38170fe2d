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
dgeo.core.errors
================

Exception hierarchy of the package

Classes
-------
* GeodesicError - base class, carries the index of the failing step if known
* SpacelikeStep - a segment has a negative quadratic form
* MetricSingularity - the metric field is undefined at an evaluation point
* ZeroLength - three point length vanishes where a positive one is needed
* DescentBudgetExceeded - local descent did not terminate within the budget
* DescentNotDecreasing - a descent move did not lower the deviation
* RangeOverflow - lattice coordinate not representable as int64
* SingularMetricInversion - metric tensor not invertible to working precision
* NormDriftExceeded - ODE velocity norm left the tolerance band
* InsufficientApsides - not enough apsides for a shift measurement
* ConfigError - run configuration parse or validation error
* AngleUndefined - warning issued for samples at the spatial origin
"""


class GeodesicError(Exception):

    """Base class of the package errors

    step_index: index of the trajectory point being computed when the error
    was raised (None when unknown)
    """

    def __init__(self, message):
        super(GeodesicError, self).__init__(message)
        self.message = message
        self.step_index = None

    def __str__(self):
        if self.step_index is None:
            return self.message
        return "step %d: %s" % (self.step_index, self.message)


class SpacelikeStep(GeodesicError, ValueError):

    def __init__(self, value, where=""):
        self.value = value
        self.where = where
        msg = "spacelike separation (quadratic form %r)" % (value,)
        if where:
            msg = msg + " at " + where
        super(SpacelikeStep, self).__init__(msg)


class MetricSingularity(GeodesicError, ValueError):

    def __init__(self, r, m, point=None):
        self.r = r
        self.m = m
        self.point = point
        msg = "metric undefined at r = %r (m = %r)" % (r, m)
        if point is not None:
            msg = msg + ", point " + str(tuple(point))
        super(MetricSingularity, self).__init__(msg)


class ZeroLength(GeodesicError, ValueError):
    pass


class DescentBudgetExceeded(GeodesicError, RuntimeError):

    def __init__(self, iterations):
        self.iterations = iterations
        super(DescentBudgetExceeded, self).__init__(
            "local descent exceeded %d moves" % iterations)


class DescentNotDecreasing(GeodesicError, ArithmeticError):

    def __init__(self, previous, value, where=""):
        self.previous = previous
        self.value = value
        msg = "descent move from w = %r to w = %r" % (previous, value)
        if where:
            msg = msg + " at " + where
        super(DescentNotDecreasing, self).__init__(msg)


class RangeOverflow(GeodesicError, OverflowError):
    pass


class SingularMetricInversion(GeodesicError, ArithmeticError):
    pass


class NormDriftExceeded(GeodesicError, ArithmeticError):

    def __init__(self, s, drift, tolerance):
        self.s = s
        self.drift = drift
        self.tolerance = tolerance
        super(NormDriftExceeded, self).__init__(
            "velocity norm drift %r exceeds %r at s = %r cm "
            "(integration step too large)" % (drift, tolerance, s))


class InsufficientApsides(GeodesicError, ValueError):
    pass


class ConfigError(GeodesicError, ValueError):

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super(ConfigError, self).__init__(message)


class AngleUndefined(UserWarning):
    pass
