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
dgeo.core.commands
==================

Implement commands to be executed on the run data structure

Classes
-------
* Command - commands interface class
* RunCommand - lattice geodesic run and its orbit analysis
* AuditCommand - post-hoc local minimum check of the lattice run
* ReferenceCommand - continuum geodesic integration sampled on the timeline
* CompareCommand - lattice against continuum positions and shifts
* AnalyzeCommand - orbit analysis of an existing trajectory table
* SaveCommand - write the tables and reports of a computed result
"""

import inspect
from os import makedirs
from os.path import exists, dirname

from numpy import array as np_array
from numpy import isfinite as np_isfinite

from dgeo.core.errors import ConfigError
from dgeo.solver.descent import run_geodesic, audit_geodesic
from dgeo.continuum.reference import (integrate_to_time, sample_timeline,
                                      initial_state, lattice_initial_state,
                                      position_differences)
from dgeo.orbit.analysis import (orbit_series, series_from_arrays, detect_apsides,
                                 initial_apsis, shift_summary, swept_angles)
from dgeo.orbit.report import format_report
import dgeo.core.io as dgio
import dgeo.core.dg_logging as dg_logging

QUARTER_ORBIT_DEG = 90.0


def _caller_line():
    """Return the source line that invoked the command"""
    # _caller_line, _execute, Command.__init__, <command>.__init__, caller
    try:
        context = inspect.stack()[4][4]
    except IndexError:
        return ""
    return context[0].strip() if context else ""


class Command(object):  # COMMAND interface ###################################

    """Command interface class

    *Methods*
    * __init__
    * _execute: log the command and execute it
    * execute: to be overridden in command implementation
    """

    def __init__(self):
        try:
            self.is_loggable
        except AttributeError:
            self.is_loggable = True

        self._execute()

    def _execute(self):
        """Log the command and execute it
        """
        if self.is_loggable:
            # Logs the function call
            dg_logging.fun_call_logger.info(_caller_line())
            # Logs the command and its arguments dict
            dg_logging.command_log.info(type(self).__name__ + "\t" + str(self.__dict__))
        self.execute()

    def execute(self):
        raise NotImplementedError
###############################################################################


class RunCommand(Command):

    """Compute the lattice geodesic of the configuration, its orbit series
    and apsides
    """

    def __init__(self, geo_data):
        """
        geo_data: dgeo.core.data_def.GeoData instance
        """
        self.data = geo_data
        super(RunCommand, self).__init__()

    def execute(self):
        cfg = self.data.config
        field = self.data.get_field()
        E0, E1 = cfg.initial_points()
        self.data.trajectory = run_geodesic(field, E0, E1, cfg.steps, cfg.solver_config())
        self.data.series = orbit_series(self.data.trajectory)
        self.data.apsides = detect_apsides(self.data.series)
        self.data.initial_apsis = initial_apsis(self.data.series)


class AuditCommand(Command):

    """Check every point of the lattice run against its spatial neighbours"""

    def __init__(self, geo_data):
        self.data = geo_data
        super(AuditCommand, self).__init__()

    def execute(self):
        self.data.audit_violations = audit_geodesic(self.data.get_field(),
                                                    self.data.trajectory,
                                                    self.data.config.solver_config())


class ReferenceCommand(Command):

    """Integrate the continuum geodesic equation from the initial conditions
    of the configuration and sample it on the lattice timeline
    """

    def __init__(self, geo_data):
        self.data = geo_data
        super(ReferenceCommand, self).__init__()

    def execute(self):
        cfg = self.data.config
        field = self.data.get_field()
        E0, E1 = cfg.initial_points()
        if cfg.ode_start == "lattice":
            state0 = lattice_initial_state(field, E0, E1, cfg.delta_cm)
        else:
            state0 = initial_state(field, (0.0, cfg.x0_cm, cfg.y0_cm), (cfg.vx_c, cfg.vy_c))
        times = [k * cfg.a * cfg.delta_cm for k in range(cfg.steps + 2)]
        states = integrate_to_time(field, state0, times[-1], cfg.ode_step(),
                                   cfg.ode_h_cm, cfg.ode_norm_tol)
        positions = sample_timeline(states, times)
        self.data.reference_states = states
        self.data.reference_series = series_from_arrays(positions[:, 0], positions[:, 1],
                                                        positions[:, 2])
        self.data.reference_apsides = detect_apsides(self.data.reference_series)
        self.data.reference_initial_apsis = initial_apsis(self.data.reference_series)
        dense = np_array([st.x for st in states])
        self.data.dense_series = series_from_arrays(dense[:, 0], dense[:, 1], dense[:, 2])
        self.data.dense_apsides = detect_apsides(self.data.dense_series)


class CompareCommand(Command):

    """Compare the lattice run with the continuum reference

    Positions are compared on the common timeline samples; shifts come from
    the lattice apsides and from the apsides of every integration step.
    """

    def __init__(self, geo_data):
        self.data = geo_data
        super(CompareCommand, self).__init__()

    def execute(self):
        cfg = self.data.config
        lat = self.data.series
        ode = self.data.reference_series
        d_cm, d_cells, relative = position_differences(
            [(s.x, s.y) for s in lat], [(s.x, s.y) for s in ode], cfg.delta_cm)
        n = len(d_cm)
        rows = [(i, lat[i].t, ode[i].x - lat[i].x, ode[i].y - lat[i].y,
                 d_cm[i], d_cells[i], relative[i]) for i in range(n)]
        swept = swept_angles(lat[:n])
        quarter = [relative[i] for i in range(n)
                   if abs(swept[i]) <= QUARTER_ORBIT_DEG and np_isfinite(relative[i])]
        m = cfg.m
        lattice_shifts = shift_summary(self.data.apsides, m or 0.0)
        ode_shifts = shift_summary(self.data.dense_apsides, m or 0.0)
        summary = {
            'compared_steps': n,
            'truncated': len(lat) != len(ode),
            'lattice_steps': len(lat),
            'reference_steps': len(ode),
            'max_distance_cm': float(d_cm.max()) if n else 0.0,
            'mean_distance_cm': float(d_cm.mean()) if n else 0.0,
            'max_distance_cells': float(d_cells.max()) if n else 0.0,
            'mean_distance_cells': float(d_cells.mean()) if n else 0.0,
            'quarter_orbit_max_relative': max(quarter) if quarter else 0.0,
            'lattice_observed_shifts': lattice_shifts['observed'],
            'reference_observed_shifts': ode_shifts['observed'],
            'lattice_perihelion_shifts': lattice_shifts['observed_perihelion'],
            'reference_perihelion_shifts': ode_shifts['observed_perihelion'],
        }
        self.data.compare_rows = rows
        self.data.compare_summary = summary


class AnalyzeCommand(Command):

    """Orbit analysis of a trajectory table written by an earlier run"""

    def __init__(self, geo_data, table_path):
        """
        geo_data: dgeo.core.data_def.GeoData instance
        table_path: tsv, csv or h5 table with columns t_cm, x_cm, y_cm
        """
        self.data = geo_data
        self.table_path = table_path
        super(AnalyzeCommand, self).__init__()

    def execute(self):
        cols = dgio.TableIO.from_path(self.table_path).read_columns(self.table_path)
        missing = [c for c in ("t_cm", "x_cm", "y_cm") if c not in cols]
        if missing:
            raise ConfigError("%s: missing columns %s" % (self.table_path, ", ".join(missing)))
        self.data.series = series_from_arrays(cols["t_cm"], cols["x_cm"], cols["y_cm"])
        self.data.apsides = detect_apsides(self.data.series)
        self.data.initial_apsis = initial_apsis(self.data.series)


def _prepare(path):
    directory = dirname(path)
    if directory and not exists(directory):
        makedirs(directory)
    return path


class SaveCommand(Command):

    """Write the output files of a computed result

    what: 'run', 'reference', 'compare', 'audit' or 'analysis'
    """

    def __init__(self, geo_data, what):
        self.data = geo_data
        self.what = what
        super(SaveCommand, self).__init__()

    def _table(self, key, columns, rows):
        path = _prepare(self.data.config.output_path(key))
        dgio.TableIO.from_path(path).write_table(path, columns, rows)
        self.data.written_files.append(path)

    def _report(self, series, apsides, initial, suffix=""):
        path = self.data.config.output_path("report_out")
        if suffix:
            root, dot, ext = path.rpartition(".")
            path = root + suffix + dot + ext if dot else path + suffix
        with open(_prepare(path), "w") as f:
            f.write(format_report(series, apsides, self.data.config.m, initial))
        self.data.written_files.append(path)

    def execute(self):
        data = self.data
        cfg = data.config
        if self.what in ("run", "analysis"):
            if self.what == "run":
                rows = dgio.trajectory_rows(data.trajectory, data.series)
                self._table("trajectory_out", dgio.TRAJECTORY_COLUMNS, rows)
            self._table("apsides_out", dgio.APSIS_COLUMNS, dgio.apsis_rows(data.apsides))
            self._report(data.series, data.apsides, data.initial_apsis)
            if self.what == "run" and cfg.hdf_out:
                path = _prepare(cfg.output_path("hdf_out"))
                dgio.HdfIO().write_tables(path, [
                    ("trajectory", "Lattice trajectory", dgio.TRAJECTORY_COLUMNS, rows),
                    ("apsides", "Apsides", dgio.APSIS_COLUMNS, dgio.apsis_rows(data.apsides))])
                data.written_files.append(path)
        elif self.what == "reference":
            self._table("reference_out", dgio.REFERENCE_COLUMNS,
                        dgio.series_rows(data.reference_series))
            self._report(data.reference_series, data.reference_apsides,
                         data.reference_initial_apsis, "_reference")
        elif self.what == "compare":
            self._table("compare_out", dgio.COMPARE_COLUMNS, data.compare_rows)
        elif self.what == "audit":
            rows = [(v.index, v.point[0] * cfg.delta_cm, v.point[1] * cfg.delta_cm,
                     v.point[2] * cfg.delta_cm, v.neighbour[1] * cfg.delta_cm,
                     v.neighbour[2] * cfg.delta_cm, v.deviation, v.neighbour_deviation)
                    for v in data.audit_violations]
            self._table("audit_out", dgio.AUDIT_COLUMNS, rows)
        else:
            raise ValueError("nothing to save for %r" % (self.what,))
