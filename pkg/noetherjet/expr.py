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

"""Scalar expressions over jet coordinates

Expressions are plain `sympy` expressions whose free symbols are the jet
coordinates ``t`` and ``y<i>_<a>``. This module fixes how those symbols are
named, how text is parsed into expressions and printed back out, and what
canonical form, numerical evaluation and equivalence mean for them.
"""

import math
import re
import tokenize
from collections import namedtuple
from functools import lru_cache

import numpy

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr as _parse_sympy,
    rationalize,
    standard_transformations,
)
from sympy.printing.str import StrPrinter

from .errors import (
    DomainError,
    ExpressionSyntaxError,
    MissingAssignmentError,
    UnknownCoordinateError,
)

__author__ = 'The noetherjet developers'

#: functions recognised by the expression grammar
FUNCTIONS = {
    'sin': sympy.sin,
    'cos': sympy.cos,
    'exp': sympy.exp,
    'ln': sympy.log,
    'sqrt': sympy.sqrt,
}

#: largest denominator allowed in a rational exponent
MAX_ROOT_DENOMINATOR = 4

#: default number of sample points for probabilistic equivalence
EQUIVALENCE_SAMPLES = 20

#: default absolute tolerance for probabilistic equivalence
EQUIVALENCE_TOLERANCE = 1e-9

#: default sampling interval for each coordinate
SAMPLE_RANGE = (-2., 2.)

#: default seed of the sampling generator
DEFAULT_SEED = 0

ZERO = sympy.Integer(0)
ONE = sympy.Integer(1)


# -- coordinates --------------------------------------------------------------

_COORD_NAME = re.compile(r'\Ay(?P<fiber>[1-9]\d*)_(?P<order>\d+)\Z')


class CoordId(namedtuple('CoordId', ('fiber', 'order'))):
    """Identifier of a single jet coordinate

    The time coordinate is ``CoordId(0, 0)``; the fiber coordinate
    :math:`y^i_{(a)}` is ``CoordId(i, a)``. The tuple ordering (time first,
    then by fiber, then by order) is the fixed total order used for
    coframe multi-indices and printed output.
    """
    __slots__ = ()

    def __new__(cls, fiber=0, order=0):
        fiber = int(fiber)
        order = int(order)
        if fiber < 0 or order < 0 or (fiber == 0 and order):
            raise ValueError("invalid coordinate (fiber={0}, order={1})".format(
                fiber, order))
        return super().__new__(cls, fiber, order)

    @property
    def is_time(self):
        return self.fiber == 0

    @property
    def name(self):
        """Canonical text name of this coordinate
        """
        if self.is_time:
            return 't'
        return 'y{0.fiber}_{0.order}'.format(self)

    @property
    def symbol(self):
        """The `sympy.Symbol` for this coordinate
        """
        return _symbol(self.name)

    def raised(self, da=1):
        """Return the coordinate ``da`` derivative orders higher
        """
        if self.is_time:
            raise ValueError("the time coordinate has no derivatives")
        return type(self)(self.fiber, self.order + da)

    @classmethod
    def from_name(cls, name):
        """Parse a canonical coordinate name (``'t'`` or ``'y<i>_<a>'``)
        """
        if name == 't':
            return TIME
        match = _COORD_NAME.match(name)
        if match is None:
            raise ValueError("{0!r} is not a coordinate name".format(name))
        return cls(int(match.group('fiber')), int(match.group('order')))

    @classmethod
    def from_symbol(cls, symbol):
        return cls.from_name(symbol.name)

    def __str__(self):
        return self.name


TIME = CoordId(0, 0)


@lru_cache(maxsize=None)
def _symbol(name):
    return sympy.Symbol(name)


def is_coordinate_symbol(symbol):
    return symbol.name == 't' or _COORD_NAME.match(symbol.name) is not None


def coordinates(e):
    """Return the sorted list of jet coordinates occurring in ``e``

    Symbols that are not jet coordinates are ignored.
    """
    e = as_expr(e)
    return sorted(CoordId.from_symbol(s) for s in e.free_symbols if
                  isinstance(s, sympy.Symbol) and is_coordinate_symbol(s))


def order_of(e):
    """Return the highest derivative order of any coordinate in ``e``

    Expressions with no fiber coordinates have order 0.
    """
    return max((c.order for c in coordinates(e) if not c.is_time), default=0)


# -- construction -------------------------------------------------------------

def as_expr(value):
    """Convert ``value`` into a `sympy.Expr`

    Integers and floats are converted exactly; a float is interpreted via
    its shortest decimal representation.
    """
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, CoordId):
        return value.symbol
    if isinstance(value, bool):
        raise TypeError("cannot convert a bool to an expression")
    if isinstance(value, int):
        return sympy.Integer(value)
    if isinstance(value, float):
        return sympy.Rational(repr(value))
    raise TypeError("cannot convert {0!r} to an expression".format(value))


def simplify(e):
    """Return the canonical form of ``e``

    The canonical form is the full polynomial expansion of ``e``, with
    applications of ``sin``, ``cos``, ``exp``, ``ln`` and ``sqrt`` treated as
    opaque atoms. When a denominator survives the expansion, numerator and
    denominator are further cancelled to lowest terms, so quotients have a
    canonical form too. No trigonometric identities are applied.

    Parameters
    ----------
    e : `sympy.Expr`
        the expression to simplify

    Returns
    -------
    canonical : `sympy.Expr`
        a value-preserving canonical form of ``e``

    Examples
    --------
    >>> from noetherjet.expr import (parse_expr, simplify)
    >>> from noetherjet.jet import Chart
    >>> simplify(parse_expr('(y1_0 + 1) * (y1_0 - 1)', Chart(1, 1)))
    y1_0**2 - 1
    """
    e = sympy.expand(as_expr(e))
    if _has_denominator(e):
        e = sympy.cancel(e)
    return e


def _has_denominator(e):
    return any(p.exp.is_negative for p in e.atoms(sympy.Pow))


def partial(e, c):
    """Return the canonical partial derivative of ``e`` with respect to ``c``
    """
    return simplify(sympy.diff(as_expr(e), c.symbol))


# -- parsing ------------------------------------------------------------------

_TOKEN = re.compile(
    r'\s*(?:(?P<number>\d+\.\d*|\.\d+|\d+)'
    r'|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
    r'|(?P<op>[-+*/^()]))')

_ANY_COORD_NAME = re.compile(r'\A(?:[yqp]\d+(?:_\d+)?|t)\Z')

_TRANSFORMATIONS = standard_transformations + (convert_xor, rationalize)


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        if match is None:
            raise ExpressionSyntaxError(
                "unexpected character {0!r} at position {1} in {2!r}".format(
                    src[pos], pos, src))
        pos = match.end()
        tokens.append((match.lastgroup, match.group(match.lastgroup)))
    return tokens


def _check_tokens(tokens, names, src):
    if not tokens:
        raise ExpressionSyntaxError("empty expression")
    for idx, (kind, value) in enumerate(tokens):
        following = tokens[idx + 1][1] if idx + 1 < len(tokens) else None
        if kind == 'op' and value == '*' and following == '*':
            raise ExpressionSyntaxError(
                "use '^' for powers, not '**', in {0!r}".format(src))
        if kind != 'name':
            continue
        if value in FUNCTIONS:
            if following != '(':
                raise ExpressionSyntaxError(
                    "function {0!r} must be called, in {1!r}".format(
                        value, src))
        elif value not in names:
            if _ANY_COORD_NAME.match(value):
                raise UnknownCoordinateError(
                    "coordinate {0!r} does not exist in this chart".format(
                        value))
            raise ExpressionSyntaxError(
                "unknown identifier {0!r} in {1!r}".format(value, src))
        elif following == '(':
            raise ExpressionSyntaxError(
                "{0!r} is not a function, in {1!r}".format(value, src))


def _check_exponents(e, src):
    for power in e.atoms(sympy.Pow):
        exponent = power.exp
        if not exponent.is_Rational:
            raise ExpressionSyntaxError(
                "only rational exponents are supported, in {0!r}".format(src))
        if exponent.q > MAX_ROOT_DENOMINATOR:
            raise ExpressionSyntaxError(
                "exponent {0} has a denominator larger than {1}, "
                "in {2!r}".format(exponent, MAX_ROOT_DENOMINATOR, src))


def parse_expr(src, chart):
    """Parse an expression string over the coordinates of a chart

    Parameters
    ----------
    src : `str`
        the text to parse, e.g. ``'y1_1^2 / 2'``; in Hamiltonian charts the
        aliases ``q<i>``, ``p<j>``, ``q<i>_<a>`` and ``p<j>_<a>`` may be
        used in place of ``y<i>_<a>``
    chart : `~noetherjet.jet.Chart`
        the chart whose coordinates may appear in ``src``

    Returns
    -------
    e : `sympy.Expr`
        the parsed expression, in canonical form

    Raises
    ------
    noetherjet.errors.ExpressionSyntaxError
        if ``src`` is malformed
    noetherjet.errors.UnknownCoordinateError
        if ``src`` names a coordinate outside of ``chart``
    """
    if not isinstance(src, str):
        raise ExpressionSyntaxError(
            "expressions must be given as text, not {0}".format(
                type(src).__name__))
    src = src.strip()
    names = chart.aliases()
    _check_tokens(_tokenize(src), names, src)
    local_dict = dict(names)
    local_dict.update(FUNCTIONS)
    try:
        e = _parse_sympy(src, local_dict=local_dict,
                         transformations=_TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, tokenize.TokenError) as exc:
        raise ExpressionSyntaxError(
            "cannot parse {0!r}: {1}".format(src, exc)) from exc
    if not isinstance(e, sympy.Expr):
        raise ExpressionSyntaxError("{0!r} is not a scalar expression".format(
            src))
    _check_exponents(e, src)
    return simplify(e)


# -- printing -----------------------------------------------------------------

class JetPrinter(StrPrinter):
    """String printer emitting the noetherjet expression grammar
    """
    def __init__(self, aliases=None, settings=None):
        super().__init__(settings)
        self._aliases = aliases or {}

    def _print_Symbol(self, expr):
        return self._aliases.get(expr.name, expr.name)

    def _print_Pow(self, expr, rational=False):
        return super()._print_Pow(expr, rational=rational).replace('**', '^')

    def _print_log(self, expr):
        return 'ln({0})'.format(self._print(expr.args[0]))

    def _print_Exp1(self, expr):
        return 'exp(1)'


def to_string(e, chart=None):
    """Print an expression in the noetherjet grammar

    If ``chart`` is Hamiltonian, coordinates are printed with their
    ``q``/``p`` aliases.
    """
    aliases = chart.print_aliases() if chart is not None else None
    return JetPrinter(aliases).doprint(as_expr(e))


# -- evaluation ---------------------------------------------------------------

def _point_key(key):
    if isinstance(key, CoordId):
        return key.name
    if isinstance(key, sympy.Symbol):
        return key.name
    return str(key)


@lru_cache(maxsize=2048)
def _compile_math(e, names):
    return sympy.lambdify([_symbol(n) for n in names], e, modules='math')


def evaluate(e, point):
    """Evaluate ``e`` at a point of the jet space

    Parameters
    ----------
    e : `sympy.Expr`
        the expression to evaluate
    point : `dict`
        map from coordinate (`CoordId`, `sympy.Symbol` or name) to value;
        every coordinate of ``e`` must be assigned

    Returns
    -------
    value : `float`

    Raises
    ------
    noetherjet.errors.MissingAssignmentError
        if a coordinate of ``e`` has no value in ``point``
    noetherjet.errors.DomainError
        if ``e`` is not real-valued at ``point``
    """
    e = as_expr(e)
    values = {_point_key(key): val for key, val in point.items()}
    names = tuple(sorted(c.name for c in coordinates(e)))
    missing = [n for n in names if n not in values]
    if missing:
        raise MissingAssignmentError(
            "no value given for {0}".format(', '.join(missing)))
    func = _compile_math(e, names)
    return _call(func, [float(values[n]) for n in names])


def _call(func, args):
    try:
        value = func(*args)
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise DomainError(str(exc)) from exc
    if isinstance(value, complex):
        raise DomainError("expression is complex-valued at {0}".format(args))
    value = float(value)
    if not math.isfinite(value):
        raise DomainError("expression is not finite at {0}".format(args))
    return value


def compile_numpy(exprs, coords):
    """Return a vectorised `numpy` function evaluating several expressions

    Parameters
    ----------
    exprs : `list` of `sympy.Expr`
        the expressions to compile
    coords : `list` of `CoordId`
        the positional arguments of the returned function

    Returns
    -------
    func : `callable`
        ``func(*arrays)`` returns a `list` with one entry per expression;
        constant expressions evaluate to scalars
    """
    return sympy.lambdify([c.symbol for c in coords],
                          [as_expr(e) for e in exprs], modules='numpy')


# -- equivalence --------------------------------------------------------------

class Sampling(namedtuple('Sampling', ('samples', 'tolerance', 'low', 'high',
                                       'seed'))):
    """Policy for probabilistic equivalence testing
    """
    __slots__ = ()


_SAMPLING = Sampling(EQUIVALENCE_SAMPLES, EQUIVALENCE_TOLERANCE,
                     SAMPLE_RANGE[0], SAMPLE_RANGE[1], DEFAULT_SEED)


def configure_sampling(**kwargs):
    """Update the process-wide probabilistic sampling policy

    Parameters
    ----------
    **kwargs
        any of ``samples``, ``tolerance``, ``low``, ``high``, ``seed``

    Returns
    -------
    sampling : `Sampling`
        the policy now in effect
    """
    global _SAMPLING
    _SAMPLING = _SAMPLING._replace(**kwargs)
    return _SAMPLING


def get_sampling():
    return _SAMPLING


class Verdict(namedtuple('Verdict', ('equal', 'probabilistic'))):
    """Outcome of an equivalence test

    A `Verdict` is truthy exactly when the expressions were found equal;
    ``probabilistic`` records whether that answer came from random sampling
    rather than from canonical forms.
    """
    __slots__ = ()

    def __bool__(self):
        return bool(self.equal)


def equivalent(e1, e2, sampling=None):
    """Test whether two expressions define the same function

    Canonical forms are compared first. If they differ and their difference
    is a polynomial, the expressions are definitely different. Otherwise
    both are evaluated at random points; any disagreement beyond tolerance
    is a definite counterexample, while agreement at every point is reported
    as a probabilistic verdict.

    Parameters
    ----------
    e1, e2 : `sympy.Expr`
        the expressions to compare
    sampling : `Sampling`, optional
        sampling policy, defaults to the process-wide policy
        (see `configure_sampling`)

    Returns
    -------
    verdict : `Verdict`
    """
    sampling = sampling or _SAMPLING
    e1 = as_expr(e1)
    e2 = as_expr(e2)
    diff = simplify(e1 - e2)
    if diff == 0:
        return Verdict(True, False)
    coords = sorted(set(coordinates(e1)) | set(coordinates(e2)))
    if diff.is_polynomial(*[c.symbol for c in coords]):
        return Verdict(False, False)
    names = tuple(c.name for c in coords)
    first = _compile_math(e1, names)
    second = _compile_math(e2, names)
    rng = numpy.random.default_rng(sampling.seed)
    accepted = 0
    for _ in range(10 * sampling.samples):
        if accepted >= sampling.samples:
            break
        args = rng.uniform(sampling.low, sampling.high, size=len(names))
        try:
            delta = _call(first, args) - _call(second, args)
        except DomainError:
            continue
        accepted += 1
        if abs(delta) > sampling.tolerance:
            return Verdict(False, False)
    return Verdict(accepted > 0, True)


def is_zero(e, sampling=None):
    """Test whether ``e`` vanishes identically, see `equivalent`
    """
    return equivalent(e, ZERO, sampling=sampling)
