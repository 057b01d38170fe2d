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
dgeo.core
=========

Implement the core functionality of the package.

Modules
-------
* dgeo.core.geometry - points, metric tensors, intervals and deviations
* dgeo.core.metrics - Schwarzschild and Minkowski metric fields
* dgeo.core.config - run configuration parsing and validation
* dgeo.core.data_def - run data structure invoking the commands
* dgeo.core.commands - commands to be executed on the run data
* dgeo.core.io - trajectory and report tables
* dgeo.core.errors - exception hierarchy
* dgeo.core.dg_logging - loggers setup
* dgeo.core.prefs - global defaults
"""

__all__ = ["geometry", "metrics", "config", "data_def", "commands", "io",
           "errors", "dg_logging", "prefs"]
