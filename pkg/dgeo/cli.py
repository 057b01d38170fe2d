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
dgeo.cli
========

Command line front end

    dgeo run CONFIG        lattice geodesic, trajectory table and apsis report
    dgeo reference CONFIG  continuum geodesic sampled on the lattice timeline
    dgeo compare CONFIG    both engines and their position differences
    dgeo analyze TABLE     apsis report of an existing trajectory table

Configuration keys are overridden with --set key=value.

Exit codes: 0 success, 1 usage or configuration error, 2 runtime error.
"""

from __future__ import print_function

import argparse
import logging
import sys

import tables

import dgeo
from dgeo.core.config import load_config, analysis_config, KEYS, REQUIRED
from dgeo.core.data_def import GeoData
from dgeo.core.errors import ConfigError, GeodesicError
import dgeo.core.dg_logging as dg_logging

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_RUNTIME = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


def _config_help():
    lines = ["configuration keys (required: %s):" % ", ".join(REQUIRED)]
    for key in sorted(KEYS):
        default = KEYS[key][1]
        if key not in REQUIRED:
            lines.append("  %-22s default %r" % (key, default))
    return "\n".join(lines)


def build_parser():
    parser = _Parser(prog="dgeo", description="Straightest discrete geodesics "
                     "on integer spacetime lattices",
                     epilog=_config_help(),
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--version", action="version", version="%(prog)s " + dgeo.__version__)
    common = _Parser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="log to stderr (-v info, -vv debug)")
    common.add_argument("--no-log-files", action="store_true",
                        help="do not write log files in %s" % dg_logging.LOG_DIR)
    common.add_argument("-o", "--output-dir", help="directory of the output files")

    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name, text in (("run", "lattice geodesic run"),
                       ("reference", "continuum geodesic equation sampled on the timeline"),
                       ("compare", "lattice run against the continuum reference")):
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("config", help="key = value configuration file")
        p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                       help="override a configuration key")
    p = sub.add_parser("analyze", parents=[common], help="apsis report of a trajectory table")
    p.add_argument("table", help="tsv, csv or h5 table with columns t_cm, x_cm, y_cm")
    p.add_argument("--m-cm", type=float, help="Schwarzschild radius for the theoretical shift")
    p.add_argument("--table-format", choices=("tsv", "csv"))
    p.add_argument("--report-out")
    p.add_argument("--apsides-out")
    return parser


def _setup_logging(args):
    if not args.no_log_files:
        dg_logging.init_log_files()
    if args.verbose:
        dg_logging.init_console(logging.DEBUG if args.verbose > 1 else logging.INFO)


def _print_files(data):
    for path in data.written_files:
        print("wrote %s" % path)


def _cmd_run(data):
    data.run()
    data.save("run")
    if data.audit_violations is not None:
        data.save("audit")
        if data.audit_violations:
            print("warning: %d audit violations" % len(data.audit_violations), file=sys.stderr)
    traj = data.trajectory
    for v in traj.violations:
        print("warning: %r" % (v,), file=sys.stderr)
    print("%d points, %d apsides, %d descent moves"
          % (len(traj), len(data.apsides), traj.summary()['descent_moves']))


def _cmd_reference(data):
    data.reference()
    data.save("reference")
    print("%d samples, %d integration steps, %d apsides"
          % (len(data.reference_series), len(data.reference_states) - 1,
             len(data.reference_apsides)))


def _cmd_compare(data):
    data.compare()
    data.save("run")
    data.save("compare")
    summary = data.compare_summary
    if summary['truncated']:
        print("note: tables of %d and %d steps truncated to %d"
              % (summary['lattice_steps'], summary['reference_steps'],
                 summary['compared_steps']))
    for key in ('compared_steps', 'max_distance_cm', 'mean_distance_cm',
                'max_distance_cells', 'mean_distance_cells',
                'quarter_orbit_max_relative', 'lattice_observed_shifts',
                'reference_observed_shifts', 'lattice_perihelion_shifts',
                'reference_perihelion_shifts'):
        print("%s = %r" % (key, summary[key]))


def _cmd_analyze(data, args):
    data.analyze(args.table)
    data.save("analysis")
    print("%d samples, %d apsides" % (len(data.series), len(data.apsides)))


def main(argv=None):
    """Run the command line and return the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("dgeo: a command is required (run, reference, compare, analyze)")
        if args.command == "analyze":
            config = analysis_config(m_cm=args.m_cm, output_dir=args.output_dir,
                                     table_format=args.table_format,
                                     report_out=args.report_out,
                                     apsides_out=args.apsides_out)
        else:
            overrides = list(args.set)
            if args.output_dir:
                overrides.append("output_dir=" + args.output_dir)
            config = load_config(args.config, overrides)
    except (UsageError, ConfigError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_CONFIG
    except (IOError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_CONFIG

    data = GeoData(config)
    try:
        _setup_logging(args)
        if args.command == "run":
            _cmd_run(data)
        elif args.command == "reference":
            _cmd_reference(data)
        elif args.command == "compare":
            _cmd_compare(data)
        else:
            _cmd_analyze(data, args)
    except ConfigError as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_CONFIG
    except (GeodesicError, ValueError, IOError, OSError, tables.exceptions.HDF5ExtError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_RUNTIME
    _print_files(data)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
