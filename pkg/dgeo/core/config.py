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
dgeo.core.config
================

Run configuration: key = value text, '#' comments

Functions
---------
* parse_config - parse and validate a configuration text
* load_config - parse a configuration file
* shipped_config - path of a configuration installed with the package
* analysis_config - output settings for the analysis of an existing table

Classes
-------
* RunConfig - validated run parameters
"""

import io
from os.path import join, dirname

from dgeo.core.errors import ConfigError
from dgeo.core.geometry import resolve_axes
from dgeo.core.metrics import MetricField, schwarzschild_radius_from_mass
from dgeo.solver.predictors import Predictor
from dgeo.solver.descent import SolverConfig, initial_points
import dgeo.core.prefs as prefs

DATA_DIR = join(dirname(dirname(__file__)), "data")

_TRUE = ("true", "yes", "on", "1")
_FALSE = ("false", "no", "off", "0")


def _float(text):
    return float(text)


def _int(text):
    try:
        return int(text)
    except ValueError:
        value = float(text)
        if not value.is_integer():
            raise ValueError("%r is not an integer" % text)
        return int(value)


def _bool(text):
    if text.lower() in _TRUE:
        return True
    if text.lower() in _FALSE:
        return False
    raise ValueError("%r is not a boolean" % text)


def _choice(*choices):
    def convert(text):
        if text not in choices:
            raise ValueError("%r not in %s" % (text, ", ".join(choices)))
        return text
    return convert


def _str(text):
    return text


def _metric(text):
    names = [impl.name for impl in MetricField.get_implementations()]
    return _choice(*names)(text)


def _predictor(text):
    return _choice(*Predictor.get_names())(text)


REQUIRED = ("metric", "delta_cm", "a", "x0_cm", "y0_cm", "vx_c", "vy_c", "steps")

# key: (converter, default)
KEYS = {
    "metric": (_metric, None),
    "m_cm": (_float, None),
    "mass_kg": (_float, None),
    "delta_cm": (_float, None),
    "a": (_int, None),
    "x0_cm": (_float, None),
    "y0_cm": (_float, None),
    "vx_c": (_float, None),
    "vy_c": (_float, None),
    "steps": (_int, None),
    "axes": (_choice("all", "spatial"), "all"),
    "predictor": (_predictor, prefs.DEFAULT_PREDICTOR),
    "max_descent_iters": (_int, prefs.DEFAULT_MAX_DESCENT_ITERS),
    "velocity_bound_check": (_bool, True),
    "audit": (_bool, False),
    "ode_ds_cm": (_float, None),
    "ode_h_cm": (_float, None),
    "ode_norm_tol": (_float, prefs.DEFAULT_NORM_TOLERANCE),
    "ode_start": (_choice("lattice", "exact"), "lattice"),
    "output_dir": (_str, "."),
    "table_format": (_choice("tsv", "csv"), "tsv"),
    "hdf_out": (_str, None),
    "trajectory_out": (_str, None),
    "report_out": (_str, "report.txt"),
    "apsides_out": (_str, None),
    "reference_out": (_str, None),
    "compare_out": (_str, None),
    "audit_out": (_str, None),
}

# table outputs named <stem>.<table_format> unless set
_TABLE_STEMS = {
    "trajectory_out": "trajectory",
    "apsides_out": "apsides",
    "reference_out": "reference",
    "compare_out": "compare",
    "audit_out": "audit",
}


class RunConfig(object):

    """Validated run parameters, one attribute per configuration key

    *Methods*
    * metric_field - the MetricField of the run
    * solver_config - the SolverConfig of the run
    * initial_points - the two starting lattice points
    * ode_step - integration step of the continuum reference (cm)
    * output_path - path of an output file
    """

    def __init__(self, values):
        self.__dict__.update(values)

    @property
    def tau(self):
        return self.a * self.delta_cm

    @property
    def m(self):
        """Schwarzschild radius (cm), None when not given"""
        if self.m_cm is not None:
            return self.m_cm
        if self.mass_kg is not None:
            return schwarzschild_radius_from_mass(self.mass_kg)
        return None

    def metric_field(self):
        if self.metric == "schwarzschild":
            return MetricField.from_name(self.metric, m=self.m)
        return MetricField.from_name(self.metric)

    def solver_config(self):
        return SolverConfig(self.a, delta=self.delta_cm,
                            max_descent_iters=self.max_descent_iters,
                            axes=self.axes,
                            velocity_bound_check=self.velocity_bound_check,
                            predictor=self.predictor)

    def initial_points(self):
        return initial_points(self.x0_cm, self.y0_cm, self.vx_c, self.vy_c,
                              self.delta_cm, self.a)

    def ode_step(self):
        if self.ode_ds_cm is not None:
            return self.ode_ds_cm
        return self.tau / prefs.DEFAULT_DS_PER_TAU

    def output_path(self, key):
        name = getattr(self, key)
        if name is None:
            name = _TABLE_STEMS[key] + "." + self.table_format
        return join(self.output_dir, name)

    def as_dict(self):
        return dict((k, getattr(self, k)) for k in KEYS)

    def __repr__(self):
        return "RunConfig(%s)" % ", ".join("%s=%r" % (k, getattr(self, k)) for k in sorted(KEYS))


def _split(line, lineno):
    if "=" not in line:
        raise ConfigError("expected key = value, got %r" % line, lineno)
    key, value = line.split("=", 1)
    key = key.strip()
    value = value.strip()
    if not key or not value:
        raise ConfigError("expected key = value, got %r" % line, lineno)
    return key, value


def _set(values, lines, key, value, lineno):
    if key not in KEYS:
        raise ConfigError("unknown key %r" % key, lineno)
    try:
        values[key] = KEYS[key][0](value)
    except ValueError as err:
        raise ConfigError("%s: %s" % (key, err), lineno)
    lines[key] = lineno


def _validate(values, lines):
    def fail(msg, key):
        raise ConfigError(msg, lines.get(key))

    missing = [k for k in REQUIRED if values.get(k) is None]
    if missing:
        raise ConfigError("missing required keys: %s" % ", ".join(missing))
    if values["metric"] == "schwarzschild":
        given = [k for k in ("m_cm", "mass_kg") if values.get(k) is not None]
        if len(given) != 1:
            raise ConfigError("schwarzschild metric needs exactly one of m_cm, mass_kg")
        if not values[given[0]] > 0:
            fail("%s must be positive" % given[0], given[0])
    else:
        for k in ("m_cm", "mass_kg"):
            if values.get(k) is not None:
                fail("%s only applies to the schwarzschild metric" % k, k)
    if not values["delta_cm"] > 0:
        fail("delta_cm must be positive", "delta_cm")
    if values["a"] < 1:
        fail("a must be a positive integer", "a")
    if values["steps"] < 0:
        fail("steps must be non negative", "steps")
    if values["max_descent_iters"] < 1:
        fail("max_descent_iters must be a positive integer", "max_descent_iters")
    speed = (values["vx_c"] ** 2 + values["vy_c"] ** 2) ** 0.5
    if not speed < 1:
        fail("speed >= c (|v| = %r)" % speed, "vy_c" if "vy_c" in lines else "vx_c")
    for k in ("ode_ds_cm", "ode_h_cm", "ode_norm_tol"):
        if values.get(k) is not None and not values[k] > 0:
            fail("%s must be positive" % k, k)
    resolve_axes(values["axes"], 3)


def parse_config(text, overrides=()):
    """Return the RunConfig of a configuration text

    text: key = value lines, '#' starts a comment
    overrides: 'key=value' strings applied after the text

    raise ConfigError with the line number of the faulty line
    """
    values = dict((k, v[1]) for k, v in KEYS.items())
    lines = {}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, value = _split(line, lineno)
        if key in seen:
            raise ConfigError("duplicate key %r" % key, lineno)
        seen.add(key)
        _set(values, lines, key, value, lineno)
    for item in overrides:
        key, value = _split(item, None)
        _set(values, lines, key, value, None)
    _validate(values, lines)
    return RunConfig(values)


def load_config(path, overrides=()):
    with io.open(path, encoding="utf-8") as f:
        return parse_config(f.read(), overrides)


def shipped_config(name):
    """Return the path of a configuration shipped in dgeo/data"""
    return join(DATA_DIR, name)


def analysis_config(m_cm=None, **outputs):
    """Return a RunConfig holding only output settings, for the analysis of
    an existing table

    m_cm: Schwarzschild radius for the theoretical shift (None to omit it)
    outputs: output keys (output_dir, table_format, report_out, apsides_out)
    """
    values = dict((k, v[1]) for k, v in KEYS.items())
    lines = {}
    if m_cm is not None:
        _set(values, lines, "m_cm", str(m_cm), None)
    for key, value in outputs.items():
        if key not in ("output_dir", "table_format", "report_out", "apsides_out"):
            raise ConfigError("key %r does not apply to an analysis" % key)
        if value is not None:
            _set(values, lines, key, str(value), None)
    return RunConfig(values)
