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
dgeo.orbit.report
=================

Text report of the apsides of an orbit

Each apsis is a block giving its kind, time, position, angle, distance and
speed. An aphelion block closes with the theoretical shift of the latest
perihelion/aphelion pair and the observed shift since the previous aphelion.
The first aphelion is measured from the starting pair when that pair makes
an aphelion, and shows no observed shift otherwise.

Functions
---------
* format_number - integral values without a fractional part, others by repr
* format_apsis - lines of one apsis block
* format_report - the whole report
"""

from dgeo.orbit.analysis import (APHELION, PERIHELION, theoretical_shift,
                                 unwrap_angle)
import dgeo.core.prefs as prefs


def format_number(value):
    if value is None:
        return "undefined"
    if float(value).is_integer() and abs(value) < 1e17:
        return "%d" % value
    return repr(float(value))


def format_apsis(event):
    s = event.sample
    return [event.kind.capitalize(),
            "t = %s cm x = %s cm y = %s cm" % (format_number(s.t), format_number(s.x),
                                                format_number(s.y)),
            "angle = %s deg" % (repr(s.angle) if s.angle is not None else "undefined"),
            "distance = %r cm" % s.r,
            "velocity = %r c" % s.speed]


def format_report(series, apsides, m, initial=None):
    """Return the report text

    series: OrbitSample list (unused samples are ignored)
    apsides: ApsisEvent list in sample order
    m: Schwarzschild radius (cm) for the theoretical shift, None to omit it
    initial: ApsisEvent of the starting pair (see initial_apsis), or None
    """
    blocks = []
    perihelion = None
    aphelion = initial if initial is not None and initial.kind == APHELION else None
    for e in apsides:
        lines = format_apsis(e)
        if e.kind == PERIHELION:
            perihelion = e
        elif e.kind == APHELION:
            if m is not None and perihelion is not None:
                lines.append("theoretical shift = %r deg"
                             % theoretical_shift(m, e.sample.r, perihelion.sample.r))
            if aphelion is not None and e.sample.angle is not None \
                    and aphelion.sample.angle is not None:
                lines.append("observed shift = %r deg"
                             % unwrap_angle(e.sample.angle - aphelion.sample.angle))
            aphelion = e
        blocks.append("\n".join(lines))
    if not blocks:
        return "No apsis in %d samples\n" % len(series)
    return ("\n" + prefs.REPORT_SEPARATOR + "\n").join(blocks) + "\n"
