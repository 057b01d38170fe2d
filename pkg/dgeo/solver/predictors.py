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
dgeo.solver.predictors
======================

First guess heuristics for the next trajectory point

A predictor of order k extrapolates the last k+1 spatial positions with a
polynomial of degree k. With a shorter history it degrades to the highest
order the history allows.

Classes
-------
* Predictor - base class, extrapolation of a given order
* ConstantVelocity - C = A_i + S_i
* ConstantAcceleration - C = A_i + S_i + R_i
* ConstantJerk - C = A_i + S_i + R_i + (R_i - R_{i-1})
"""

from scipy.special import comb


class Predictor(object):

    """Base class for first guess heuristics

    *Class variables*
    * name - name used in run configurations
    * description - one line description
    * order - degree of the extrapolating polynomial
    * is_exec - whether the predictor is offered by get_implementations

    *Methods*
    * get_implementations - return the available predictors
    * from_name - return an instance of the predictor called name
    * predict - extrapolate the next spatial position
    """

    name = ""
    description = ""
    order = 0
    is_exec = False

    @classmethod
    def get_implementations(cls):
        implementations = cls.__subclasses__() + [g for s in cls.__subclasses__()
                                                  for g in s.get_implementations()]
        return [impl for impl in implementations if impl.is_exec]

    @classmethod
    def get_names(cls):
        return [impl.name for impl in cls.get_implementations()]

    @classmethod
    def from_name(cls, name):
        for impl in cls.get_implementations():
            if impl.name == name:
                return impl()
        raise ValueError("unknown predictor %r (available: %s)"
                         % (name, ", ".join(cls.get_names())))

    def effective_order(self, history_length):
        return max(0, min(self.order, history_length - 1))

    def predict(self, history):
        """Return the extrapolated spatial position (tuple of int)

        history: spatial positions (sequences of int), oldest first, the
        current position A_i last
        """
        if not history:
            raise ValueError("empty history")
        k = self.effective_order(len(history))
        weights = [(-1) ** (j + 1) * comb(k + 1, j, exact=True) for j in range(1, k + 2)]
        n = len(history[-1])
        return tuple(sum(w * history[-j][d] for j, w in enumerate(weights, 1))
                     for d in range(n))


class ConstantVelocity(Predictor):

    name = "constant-velocity"
    description = "Repeat the last displacement"
    order = 1
    is_exec = True


class ConstantAcceleration(Predictor):

    name = "constant-acceleration"
    description = "Repeat the last change of displacement"
    order = 2
    is_exec = True


class ConstantJerk(Predictor):

    name = "constant-jerk"
    description = "Repeat the last change of acceleration"
    order = 3
    is_exec = True
