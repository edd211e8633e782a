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

"""Exceptions raised by noetherjet

Every error raised deliberately by this package derives from
`NoetherJetError`. The two broad families map onto the exit codes of the
`noetherjet` command-line executable:

- `InputError` (exit code 2): the user handed us something we cannot read
- `PreconditionError` (exit code 3): the input was readable, but the
  mathematical preconditions of the requested operation do not hold
"""

import json

__author__ = 'The noetherjet developers'

#: exit code for a successful run (or a passing check)
EXIT_SUCCESS = 0
#: exit code for a check that ran to completion but failed
EXIT_FAILURE = 1
#: exit code for unreadable input
EXIT_INPUT = 2
#: exit code for a failed precondition
EXIT_PRECONDITION = 3


class NoetherJetError(Exception):
    """Base class for all noetherjet errors
    """


# -- input errors -------------------------------------------------------------

class InputError(NoetherJetError, ValueError):
    """Malformed or inconsistent user input
    """


class ExpressionSyntaxError(InputError):
    """An expression string does not conform to the grammar
    """


class UnknownCoordinateError(InputError):
    """An expression names a coordinate that does not exist in its chart
    """


class ProblemFileError(InputError):
    """A problem document is missing fields or has the wrong shape
    """


# -- evaluation errors --------------------------------------------------------

class MissingAssignmentError(NoetherJetError, KeyError):
    """A numerical evaluation was not given a value for every coordinate
    """
    def __str__(self):
        return Exception.__str__(self)


class DomainError(NoetherJetError, ArithmeticError):
    """An expression was evaluated outside of its real domain
    """


# -- precondition errors ------------------------------------------------------

class PreconditionError(NoetherJetError, ValueError):
    """A mathematical precondition of an operation does not hold
    """


class IndexOutOfRangeError(PreconditionError):
    pass


class DegreeError(PreconditionError):
    pass


class OrderBudgetExceeded(PreconditionError):
    """An operation needs jet coordinates beyond the order of its chart
    """


class SampleOffShellError(PreconditionError):
    pass


class NotSolvableError(PreconditionError):
    pass


class InvariantViolationError(PreconditionError):
    pass


class NotASymmetryError(PreconditionError):
    pass


class NotFirstIntegralError(PreconditionError):
    pass


class DegenerateRegionError(PreconditionError):
    pass


# -- classification -----------------------------------------------------------

INPUT_ERRORS = (
    InputError,
    MissingAssignmentError,
    json.JSONDecodeError,
    OSError,
)

PRECONDITION_ERRORS = (
    PreconditionError,
    DomainError,
)


def exit_code(exc):
    """Return the command-line exit code appropriate for an exception

    Parameters
    ----------
    exc : `Exception`
        the error to classify

    Returns
    -------
    code : `int`
        `EXIT_INPUT` or `EXIT_PRECONDITION`

    Raises
    ------
    TypeError
        if ``exc`` is not an error this package knows how to report
    """
    if isinstance(exc, INPUT_ERRORS):
        return EXIT_INPUT
    if isinstance(exc, PRECONDITION_ERRORS):
        return EXIT_PRECONDITION
    raise TypeError("cannot classify {0!r}".format(exc))
