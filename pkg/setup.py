# -*- coding: utf-8 -*-
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

from setuptools import setup

setup(
      name = "dgeo",
      version = "1.0",
      description = "dgeo - straightest discrete geodesics on integer spacetime lattices",
      author = "dgeo developers",
      license = "gpl-3.0",
      packages = ["dgeo",
                  "dgeo.core",
                  "dgeo.solver",
                  "dgeo.continuum",
                  "dgeo.orbit",],
      package_dir = { "dgeo" : "dgeo" },
      package_data={"dgeo": ['data/*.cfg']},
      scripts = ["scripts/dgeo"],
      python_requires = ">=3.8",
      install_requires = ["numpy>=1.20",
                          "scipy>=1.0",
                          "tables>=3.4",
                          "pandas>=1.5",
                          "astropy>=3.0",],
      extras_require = {"docs": ["Sphinx"],
                        "test": ["pytest"]},
     )
