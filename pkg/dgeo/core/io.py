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
dgeo.core.io
============

Trajectory, apsis, comparison and audit tables in text (tsv, csv) and HDF5
formats

Text tables go through pandas, binary ones through PyTables. Floats are
written with their shortest round trip representation.

Functions
---------
* trajectory_rows - rows of a lattice trajectory table
* series_rows - rows of a sampled (reference) trajectory table
* apsis_rows - rows of the machine readable apsis table

Classes
-------
* TableIO - I/O interface class
* TsvIO - tab separated tables
* CsvIO - comma separated tables
* HdfIO - hdf5 tables (pytables)
"""

import re

import pandas as pd
import tables
from numpy import float64 as np_float64

from dgeo.core.errors import ConfigError
import dgeo.core.prefs as prefs

TRAJECTORY_COLUMNS = ("step", "t_cm", "x_cm", "y_cm", "r_cm", "angle_deg",
                      "speed_c", "deviation", "descent_iters")
REFERENCE_COLUMNS = ("step", "t_cm", "x_cm", "y_cm", "r_cm", "angle_deg", "speed_c")
APSIS_COLUMNS = ("kind", "index", "t_cm", "x_cm", "y_cm", "r_cm", "angle_deg", "speed_c")
COMPARE_COLUMNS = ("step", "t_cm", "dx_cm", "dy_cm", "distance_cm", "distance_cells",
                   "relative")
AUDIT_COLUMNS = ("index", "t_cm", "x_cm", "y_cm", "neighbour_x_cm", "neighbour_y_cm",
                 "deviation", "neighbour_deviation")


def trajectory_rows(traj, series):
    """Return the rows of a lattice trajectory table

    traj: dgeo.solver.descent.Trajectory (2+1)
    series: its OrbitSample list
    """
    delta = traj.delta
    rows = []
    for i, (p, s) in enumerate(zip(traj.points, series)):
        record = traj.record(i)
        rows.append((i, p[0] * delta, p[1] * delta, p[2] * delta, s.r, s.angle, s.speed,
                     float('nan') if record is None else record.final_deviation,
                     0 if record is None else record.descent_iterations))
    return rows


def series_rows(series):
    return [(i, s.t, s.x, s.y, s.r, s.angle, s.speed) for i, s in enumerate(series)]


def apsis_rows(apsides):
    return [(e.kind, e.index, e.sample.t, e.sample.x, e.sample.y, e.sample.r,
             e.sample.angle, e.sample.speed) for e in apsides]


class TableIO(object):

    """I/O interface class

    *Methods*
    * get_implementations - return the available formats
    * from_format - return the implementation of a format name
    * write_table - write a header and rows
    * read_columns - return a dict column name -> numpy array
    """

    name = ""

    @classmethod
    def get_implementations(cls):
        found = []
        for sub in cls.__subclasses__():
            if sub.name:
                found.append(sub)
            found.extend(sub.get_implementations())
        return found

    @classmethod
    def from_format(cls, name):
        for impl in cls.get_implementations():
            if impl.name == name:
                return impl()
        raise ValueError("unknown table format %r" % (name,))

    @classmethod
    def from_path(cls, path):
        for impl in cls.get_implementations():
            if path.endswith("." + impl.name):
                return impl()
        raise ValueError("cannot guess the table format of %r" % (path,))

    def write_table(self, path, columns, rows):
        raise NotImplementedError

    def read_columns(self, path):
        raise NotImplementedError


class TextTableIO(TableIO):

    """Delimited text tables written and read through pandas

    Floats keep their shortest round trip form; missing values are empty cells.
    """

    delimiter = None

    def write_table(self, path, columns, rows):
        frame = pd.DataFrame.from_records(list(rows), columns=list(columns))
        frame.to_csv(path, sep=self.delimiter, index=False, lineterminator="\n",
                     encoding="utf-8")

    def read_columns(self, path):
        """Return a dict column name -> numpy float array (empty or non
        numeric cells nan, short rows padded with nan)

        raise ConfigError on an empty table or a row with extra fields
        """
        try:
            frame = pd.read_csv(path, sep=self.delimiter, float_precision="round_trip")
        except pd.errors.EmptyDataError:
            raise ConfigError("empty table %s" % path)
        except pd.errors.ParserError as err:
            match = re.search(r"line (\d+)", str(err))
            raise ConfigError("%s: %s" % (path, str(err).strip()),
                              int(match.group(1)) if match else None)
        return dict((col, pd.to_numeric(frame[col], errors="coerce").to_numpy(dtype=np_float64))
                    for col in frame.columns)


class TsvIO(TextTableIO):

    name = "tsv"
    delimiter = "\t"


class CsvIO(TextTableIO):

    name = "csv"
    delimiter = ","


class HdfIO(TableIO):

    """Hdf5 tables, one node per table under the root group"""

    name = "h5"

    def _description(self, columns, rows):
        desc = {}
        for pos, col in enumerate(columns):
            sample = next((r[pos] for r in rows if r[pos] is not None), 0.0)
            if isinstance(sample, str):
                desc[col] = tables.StringCol(16, pos=pos)
            elif hasattr(sample, "__index__"):
                desc[col] = tables.Int64Col(pos=pos)
            else:
                desc[col] = tables.Float64Col(pos=pos, dflt=float('nan'))
        return desc

    def write_tables(self, path, named_tables):
        """Write several tables in one file

        named_tables: list of (name, title, columns, rows)
        """
        comp_filt = tables.Filters(complevel=prefs.HDF_COMP_LEV,
                                   complib=prefs.HDF_COMP_LIB,
                                   shuffle=prefs.HDF_SHUFFLE)
        with tables.open_file(path, mode="w") as fileh:
            for name, title, columns, rows in named_tables:
                tableh = fileh.create_table(fileh.root, name,
                                            self._description(columns, rows),
                                            title, expectedrows=max(len(rows), 1),
                                            filters=comp_filt)
                row = tableh.row
                for values in rows:
                    for col, v in zip(columns, values):
                        if v is None:
                            v = float('nan')
                        elif isinstance(v, str):
                            v = v.encode("ascii")
                        row[col] = v
                    row.append()
                tableh.flush()

    def write_table(self, path, columns, rows, name="trajectory"):
        self.write_tables(path, [(name, name, columns, rows)])

    def read_columns(self, path, name="trajectory"):
        with tables.open_file(path, mode="r") as fileh:
            tableh = fileh.get_node(fileh.root, name)
            return dict((col, tableh.col(col)) for col in tableh.colnames)
