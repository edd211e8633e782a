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

"""
Configuration files for noetherjet
##################################

How to write a configuration file
=================================

The `noetherjet` command-line executable runs without a configuration file,
using the numerical defaults listed below. All symbolic results are exact and
do not depend on configuration; the options only tune the numerical checks,
namely the probabilistic equivalence test, the regularity probe and the
trajectory integrator.

Each of the below sections lists the valid options and a description of what
the value should be, and then an example of what that section might look like
in the INI format:

[equivalence]
-------------

================  =============================================================
``samples``       Number of random points at which two expressions are
                  compared when their canonical forms differ
``tolerance``     Absolute tolerance of each pointwise comparison
``sample-range``  The `(low, high)` interval from which each coordinate is
                  drawn
``seed``          Seed of the random number generator (overridden by
                  ``--seed`` on the command line)
================  =============================================================

.. code-block:: ini

   [equivalence]
   samples = 20
   tolerance = 1e-9
   ; low, high
   sample-range = -2, 2
   seed = 0

[regularity]
------------

======================  =======================================================
``step``                Central finite-difference step of the Jacobian
``rank-threshold``      Singular values below this fraction of the largest
                        one are treated as zero
``on-shell-tolerance``  Largest absolute row value accepted at a sample point
======================  =======================================================

.. code-block:: ini

   [regularity]
   step = 1e-6
   rank-threshold = 1e-8
   on-shell-tolerance = 1e-8

[integration]
-------------

=============  ================================================================
``t0``         Start of the integration window
``t1``         End of the integration window
``dt``         Requested Runge-Kutta step
``tolerance``  Largest drift of a constant of motion (and largest on-shell
               residual) accepted by ``noetherjet verify``
=============  ================================================================

.. code-block:: ini

   [integration]
   t0 = 0
   t1 = 10
   dt = 1e-3
   tolerance = 1e-6

.. note::

   Values given in the ``"window"`` object of a problem file, and the
   ``--t0``, ``--t1``, ``--dt`` and ``--tol`` command-line options, take
   precedence over the ``[integration]`` section, in that order.

Module API
==========
"""

import configparser

from .euler_lagrange import (
    JACOBIAN_STEP,
    ON_SHELL_TOLERANCE,
    RANK_THRESHOLD,
)
from .expr import (
    DEFAULT_SEED,
    EQUIVALENCE_SAMPLES,
    EQUIVALENCE_TOLERANCE,
    SAMPLE_RANGE,
)
from .verify import (
    DEFAULT_STEP,
    DEFAULT_TOLERANCE,
    DEFAULT_WINDOW,
)

__author__ = 'The noetherjet developers'


class JetConfigParser(configparser.ConfigParser):
    NOETHERJET_DEFAULTS = {
        'equivalence': {
            'samples': EQUIVALENCE_SAMPLES,
            'tolerance': EQUIVALENCE_TOLERANCE,
            'sample-range': SAMPLE_RANGE,
            'seed': DEFAULT_SEED,
        },
        'regularity': {
            'step': JACOBIAN_STEP,
            'rank-threshold': RANK_THRESHOLD,
            'on-shell-tolerance': ON_SHELL_TOLERANCE,
        },
        'integration': {
            't0': DEFAULT_WINDOW[0],
            't1': DEFAULT_WINDOW[1],
            'dt': DEFAULT_STEP,
            'tolerance': DEFAULT_TOLERANCE,
        },
    }

    def __init__(self, defaults=None, **kwargs):
        configparser.ConfigParser.__init__(self, defaults=defaults, **kwargs)
        self.set_noetherjet_defaults()

    def set_noetherjet_defaults(self):
        for section in self.NOETHERJET_DEFAULTS:
            self.add_section(section)
            for key, val in self.NOETHERJET_DEFAULTS[section].items():
                if isinstance(val, tuple):
                    self.set(section, key, ', '.join(map(str, val)))
                else:
                    self.set(section, key, str(val))

    def read(self, filenames):
        if isinstance(filenames, str):
            filenames = [filenames]
        readok = configparser.ConfigParser.read(self, filenames)
        for f in filenames:
            if f not in readok:
                raise IOError("Cannot read file %r" % f)
        return readok
    read.__doc__ = configparser.ConfigParser.read.__doc__

    def getfloats(self, section, option):
        return self._get(section, comma_separated_floats, option)

    def sampling_params(self):
        """Return the ``[equivalence]`` section as keyword arguments

        The output is suitable for :func:`noetherjet.expr.configure_sampling`.
        """
        low, high = self.getfloats('equivalence', 'sample-range')
        return {
            'samples': self.getint('equivalence', 'samples'),
            'tolerance': self.getfloat('equivalence', 'tolerance'),
            'low': low,
            'high': high,
            'seed': self.getint('equivalence', 'seed'),
        }

    def regularity_params(self):
        """Return the ``[regularity]`` section as keyword arguments

        The output is suitable for
        :func:`noetherjet.euler_lagrange.regularity_probe`.
        """
        return {
            'step': self.getfloat('regularity', 'step'),
            'threshold': self.getfloat('regularity', 'rank-threshold'),
            'tolerance': self.getfloat('regularity', 'on-shell-tolerance'),
        }


def comma_separated_floats(string):
    return tuple(map(float, string.split(',')))
