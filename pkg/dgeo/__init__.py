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
dgeo - straightest discrete geodesics on integer spacetime lattices
===================================================================

Copyright (C) 2026 - dgeo developers

This program is free software; you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation; either version 3 of the License, or
(at your option) any later version.

Sub-packages
------------
* dgeo.core - core modules: geometry, metric fields, configuration, I/O,
  commands implementation and data definition
* dgeo.solver - lattice gradient descent producing the discrete geodesics
* dgeo.continuum - continuum geodesic equation used as a reference
* dgeo.orbit - apsis detection and perihelion shift measurement
"""

try:
    from importlib.metadata import version as _dist_version, PackageNotFoundError
    __version__ = version = _dist_version("dgeo")
except (ImportError, PackageNotFoundError):
    __version__ = version = "1.0"
