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
dgeo.core.data_def
==================

Implement the run data structure and the methods invoking the commands

Functions
---------
* dg_version - Return the package version

Classes
-------
* GeoData - results of one configuration and the commands computing them
"""

import dgeo
import dgeo.core.commands as dgcomm
from dgeo.core.metrics import MetricField
from dgeo.solver.predictors import Predictor


def dg_version():
    """Return the package version"""
    return dgeo.__version__


class GeoData(object):  # CLIENT class ########################################

    """Results of one configuration

    *Methods*
    * __init__ - initialize the data structure
    * get_field - return the metric field of the configuration
    * get_metrics - return the available metric fields and their parameters
    * get_predictors - return the available predictors
    * run - invoke the lattice run command
    * audit - invoke the audit command
    * reference - invoke the continuum reference command
    * compare - invoke both engines (when needed) and the compare command
    * analyze - invoke the analysis command on a trajectory table
    * save - invoke the command writing the output files
    """

    def __init__(self, config):
        """
        config: dgeo.core.config.RunConfig
        """
        self.config = config
        self.field = None
        self.trajectory = None       # lattice Trajectory
        self.series = None           # OrbitSample list of the lattice run
        self.apsides = None
        self.initial_apsis = None    # apsis made by the starting pair
        self.audit_violations = None
        self.reference_states = None  # PhaseState list of every ODE step
        self.reference_series = None  # ODE positions on the lattice timeline
        self.reference_apsides = None
        self.reference_initial_apsis = None
        self.dense_series = None      # OrbitSample list of every ODE step
        self.dense_apsides = None
        self.compare_rows = None
        self.compare_summary = None
        self.written_files = []

    def __repr__(self):
        return "GeoData(metric=%r)" % (getattr(self.config, "metric", None),)

    def get_field(self):
        if self.field is None:
            self.field = self.config.metric_field()
        return self.field

    @staticmethod
    def get_metrics():
        return dict((impl.name, (impl.description, impl.def_params))
                    for impl in MetricField.get_implementations())

    @staticmethod
    def get_predictors():
        return dict((impl.name, impl.description) for impl in Predictor.get_implementations())

    def run(self):
        """Invoke the lattice run command (and the audit if configured)"""
        dgcomm.RunCommand(self)
        if self.config.audit:
            self.audit()

    def audit(self):
        dgcomm.AuditCommand(self)

    def reference(self):
        dgcomm.ReferenceCommand(self)

    def compare(self):
        if self.trajectory is None:
            self.run()
        if self.reference_series is None:
            self.reference()
        dgcomm.CompareCommand(self)

    def analyze(self, table_path):
        dgcomm.AnalyzeCommand(self, table_path)

    def save(self, what):
        dgcomm.SaveCommand(self, what)
        return self.written_files
