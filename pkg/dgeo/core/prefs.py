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
dgeo.core.prefs
===============

Set global defaults

Global variables
----------------

Geometry and solver
~~~~~~~~~~~~~~~~~~~
* DEFAULT_ETA: probe step of the continuous deviation, as a fraction of l(E,F,G)
* DEFAULT_MAX_DESCENT_ITERS: moves allowed to one local descent
* AUDIT_TOLERANCE: slack of the post-hoc local minimum check
* DEFAULT_PREDICTOR: name of the first guess heuristic

Continuum reference
~~~~~~~~~~~~~~~~~~~
* SCHWARZSCHILD_STEP_FRACTION: metric derivative step as a fraction of r
* FLAT_STEP_CM: metric derivative step for fields without a length scale
* SINGULAR_CONDITION: condition number above which g is not inverted
* DEFAULT_NORM_TOLERANCE: allowed drift of v'gv from 1
* DEFAULT_DS_PER_TAU: ODE steps per lattice time step when ode_ds_cm is unset

HDF trajectory compression parameters (see pytables doc for details)
~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~~
* HDF_COMP_LIB: Compression library for HDF output
* HDF_COMP_LEV: Compression level for HDF output
* HDF_SHUFFLE: Whether to use or not "shuffle" filter togheter with compression

Reports
~~~~~~~
* REPORT_SEPARATOR: line between apsis blocks
"""

DEFAULT_ETA = 1e-6
DEFAULT_MAX_DESCENT_ITERS = 10**6
AUDIT_TOLERANCE = 1e-12
DEFAULT_PREDICTOR = 'constant-acceleration'

SCHWARZSCHILD_STEP_FRACTION = 1e-4
FLAT_STEP_CM = 1.0
SINGULAR_CONDITION = 1e14
DEFAULT_NORM_TOLERANCE = 1e-6
DEFAULT_DS_PER_TAU = 20

HDF_COMP_LIB = 'zlib'
HDF_COMP_LEV = 1
HDF_SHUFFLE = True

REPORT_SEPARATOR = '-' * 45
