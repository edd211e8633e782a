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

"""Tests for `noetherjet.errors`
"""

import json

import pytest

from .. import errors


@pytest.mark.parametrize('exc, code', [
    (errors.ExpressionSyntaxError('bad'), errors.EXIT_INPUT),
    (errors.UnknownCoordinateError('y3_0'), errors.EXIT_INPUT),
    (errors.ProblemFileError('kind'), errors.EXIT_INPUT),
    (errors.MissingAssignmentError('t'), errors.EXIT_INPUT),
    (json.JSONDecodeError('Expecting value', '', 0), errors.EXIT_INPUT),
    (FileNotFoundError('problem.json'), errors.EXIT_INPUT),
    (errors.DomainError('ln(-1)'), errors.EXIT_PRECONDITION),
    (errors.OrderBudgetExceeded('2r > k'), errors.EXIT_PRECONDITION),
    (errors.NotSolvableError('sigma'), errors.EXIT_PRECONDITION),
    (errors.NotASymmetryError('X'), errors.EXIT_PRECONDITION),
    (errors.NotFirstIntegralError('f'), errors.EXIT_PRECONDITION),
])
def test_exit_code(exc, code):
    assert errors.exit_code(exc) == code


def test_exit_code_unknown():
    with pytest.raises(TypeError):
        errors.exit_code(RuntimeError('unexpected'))


def test_hierarchy():
    assert issubclass(errors.InputError, ValueError)
    assert issubclass(errors.IndexOutOfRangeError, errors.PreconditionError)
    assert issubclass(errors.MissingAssignmentError, KeyError)
    assert issubclass(errors.DomainError, ArithmeticError)
    assert not issubclass(errors.PreconditionError, errors.InputError)
    assert errors.EXIT_SUCCESS == 0
    assert errors.EXIT_FAILURE == 1
