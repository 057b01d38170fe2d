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
dgeo.core.dg_logging
====================

Setup command, solver and analysis logging

Loggers
-------
* command_log - one line per executed command (class name and arguments)
* fun_call_logger - source line invoking each command
* solver_log - lattice descent diagnostics
* orbit_log - apsis detection and angle warnings

Functions
---------
* init_log_files - attach time-stamped file handlers in the log directory
* init_console - attach a stderr handler to every package logger
"""

from os.path import expanduser, exists, join
from os import makedirs
from time import strftime
import logging

LOG_DIR = join(expanduser('~'), ".dgeo")
LOG_FORMAT = '%(asctime)s \t %(message)s'

command_log = logging.getLogger('DG_comm')
command_log.setLevel(logging.INFO)

fun_call_logger = logging.getLogger('DG_funCall')
fun_call_logger.setLevel(logging.INFO)

solver_log = logging.getLogger('DG_solver')
solver_log.setLevel(logging.DEBUG)

orbit_log = logging.getLogger('DG_orbit')
orbit_log.setLevel(logging.INFO)

ALL_LOGGERS = (command_log, fun_call_logger, solver_log, orbit_log)


def init_log_files(log_dir=LOG_DIR):
    """Create the log directory and attach one time-stamped file handler
    per logger. Return the list of log file names.

    log_dir: directory of the log files
    """
    # Log dir existence check ##
    if not exists(log_dir):
        makedirs(log_dir)

    time_string = strftime("%Y_%m_%d_%H:%M:%S")
    formatter = logging.Formatter(LOG_FORMAT)
    files = []
    for logger, suffix in ((command_log, "comm"), (fun_call_logger, "funCall"),
                           (solver_log, "solver"), (orbit_log, "orbit")):
        log_file = join(log_dir, "DG_" + time_string + "." + suffix + ".log")
        ch = logging.FileHandler(log_file)
        ch.setLevel(logging.INFO)
        ch.setFormatter(formatter)
        logger.addHandler(ch)
        files.append(log_file)
    return files


def init_console(level=logging.WARNING):
    """Attach a stderr handler with the given level to the solver and
    analysis loggers
    """
    ch = logging.StreamHandler()
    ch.setLevel(level)
    ch.setFormatter(logging.Formatter('%(name)s: %(levelname)s: %(message)s'))
    for logger in (solver_log, orbit_log):
        logger.addHandler(ch)
    return ch
