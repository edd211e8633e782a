# -*- coding: utf-8 -*-
# Copyright (C) The noetherjet developers (2026-)
#
# This file is part of the noetherjet python package.
#
# noetherjet is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# noetherjet is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with noetherjet.  If not, see <http://www.gnu.org/licenses/>.

"""General utilities for noetherjet
"""

import json

from math import ceil

__author__ = 'The noetherjet developers'


def write_lines(target, lines):
    """Write lines of text to a file path or an open file
    """
    # if not an open file, open it
    if isinstance(target, str):
        with open(target, "w") as fobj:
            write_lines(fobj, lines)
            return target

    for line in lines:
        print(line, file=target)

    return target


def render_json(obj):
    """Render ``obj`` as canonical JSON text

    Keys are sorted and the indentation is fixed, so that parsing the
    output and rendering it again reproduces the same text.
    """
    return json.dumps(obj, indent=2, sort_keys=True)


# -- utilities ----------------------------------------------------------------

def chunks(items, ngroups):
    """Split initial conditions into batches for the worker processes

    `~noetherjet.verify.verify_batch` hands one batch to each worker, so
    that every worker integrates a contiguous run of initial conditions
    and the results come back in input order.

    Parameters
    ----------
    items : `list`
        the initial conditions, one phase-space state each
    ngroups : `int`
        number of worker processes

    Returns
    -------
    iterator : iterator `list` of `list`
        at most ``ngroups`` batches of equal length, the last one shorter
        if ``len(items)`` is not a multiple of the batch length
    """
    if not items:
        return
    n = int(ceil(len(items) / ngroups))
    for i in range(0, len(items), n):
        yield items[i:i + n]
