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

"""Exterior calculus on a jet chart

Differential forms are stored in the coordinate coframe
:math:`\\{dt, dy^i_{(a)}\\}` as a map from strictly increasing tuples of
`~noetherjet.expr.CoordId` to canonical coefficients. Forms of degree zero
are returned to the caller as plain expressions.

Contraction follows the convention
:math:`(\\alpha\\wedge\\beta)(X, Y) = \\alpha(X)\\beta(Y) -
\\alpha(Y)\\beta(X)`, and :math:`\\iota_X` always contracts the first slot.
"""

import sympy

from .errors import (
    DegreeError,
    OrderBudgetExceeded,
    UnknownCoordinateError,
)
from .expr import (
    TIME,
    ZERO,
    CoordId,
    as_expr,
    coordinates,
    is_zero,
    order_of,
    simplify,
    to_string,
)
from .jet import (
    check_expr,
    holonomic_frame,
)

__author__ = 'The noetherjet developers'


def _check_same_chart(*charts):
    first = charts[0]
    for other in charts[1:]:
        if other != first:
            raise ValueError("objects live on different charts: {0!r} "
                             "and {1!r}".format(first, other))
    return first


def _check_coord(c, chart):
    if c.fiber > chart.n:
        raise UnknownCoordinateError(
            "{0} is not a coordinate of {1!r}".format(c, chart))
    if c.order > chart.k:
        raise OrderBudgetExceeded(
            "{0} exceeds the order of {1!r}".format(c, chart))


def _sort_indices(indices):
    """Sort a coframe multi-index, returning ``(sign, sorted_indices)``

    A repeated index gives ``(0, None)``.
    """
    if len(set(indices)) < len(indices):
        return 0, None
    idx = list(indices)
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return sign, tuple(idx)


# -- vector fields ------------------------------------------------------------

class VectorField(object):
    """A vector field on a jet chart

    Parameters
    ----------
    components : `dict`
        map from `~noetherjet.expr.CoordId` to component expression;
        missing directions have zero component
    chart : `~noetherjet.jet.Chart`
        the chart this field lives on
    """
    __slots__ = ('chart', 'components')

    def __init__(self, components, chart):
        comps = {}
        for coord, value in dict(components).items():
            _check_coord(coord, chart)
            value = simplify(value)
            if value != 0:
                comps[coord] = check_expr(value, chart)
        self.chart = chart
        self.components = dict(sorted(comps.items()))

    @classmethod
    def partial(cls, coord, chart):
        """The coordinate field :math:`\\partial/\\partial c`
        """
        return cls({coord: 1}, chart)

    def __getitem__(self, coord):
        return self.components.get(coord, ZERO)

    def __call__(self, f):
        """Apply this field to ``f`` as a directional derivative
        """
        f = as_expr(f)
        out = ZERO
        for coord, comp in self.components.items():
            out += comp * sympy.diff(f, coord.symbol)
        return simplify(out)

    def _combine(self, other, sign):
        _check_same_chart(self.chart, other.chart)
        comps = dict(self.components)
        for coord, value in other.components.items():
            comps[coord] = comps.get(coord, ZERO) + sign * value
        return type(self)(comps, self.chart)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        scalar = as_expr(scalar)
        return type(self)({c: scalar * v for c, v in self.components.items()},
                          self.chart)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return (self.chart == other.chart and
                self.components == other.components)

    __hash__ = None

    def is_zero(self):
        return not self.components

    def __str__(self):
        if not self.components:
            return '0'
        return ' + '.join('({0}) d/d{1}'.format(
            to_string(v, self.chart), self.chart.label(c)) for
            c, v in self.components.items())

    def __repr__(self):
        return '<VectorField {0} on {1!r}>'.format(self, self.chart)


# -- differential forms -------------------------------------------------------

class DiffForm(object):
    """A differential form on a jet chart

    Parameters
    ----------
    terms : `dict`
        map from a `tuple` of `~noetherjet.expr.CoordId` (the coframe
        elements :math:`dc_1 \\wedge \\dots \\wedge dc_p`, in any order) to a
        coefficient; terms are sorted, signed and collected
    chart : `~noetherjet.jet.Chart`
        the chart this form lives on
    degree : `int`, optional
        the degree of the form, required if ``terms`` is empty

    Examples
    --------
    >>> from noetherjet.forms import DiffForm
    >>> from noetherjet.jet import Chart
    >>> chart = Chart(n_dof=1, k=1)
    >>> q, p = chart.q(1), chart.p(1)
    >>> omega = DiffForm({(p, q): 1}, chart)
    >>> print(omega)
    (-1) dq1 ^ dp1
    """
    __slots__ = ('chart', 'degree', 'terms')

    def __init__(self, terms, chart, degree=None):
        collected = {}
        for indices, coef in dict(terms).items():
            indices = tuple(indices)
            for c in indices:
                _check_coord(c, chart)
            if degree is None:
                degree = len(indices)
            elif len(indices) != degree:
                raise DegreeError("mixed degrees {0} and {1} in one "
                                  "form".format(degree, len(indices)))
            sign, key = _sort_indices(indices)
            if sign:
                collected[key] = collected.get(key, ZERO) + sign * as_expr(
                    coef)
        if degree is None:
            raise DegreeError("degree is required for an empty form")
        self.chart = chart
        self.degree = degree
        self.terms = {}
        for key in sorted(collected):
            coef = simplify(collected[key])
            if coef != 0:
                self.terms[key] = check_expr(coef, chart)

    # -- constructors

    @classmethod
    def coframe(cls, coord, chart):
        """The exact 1-form :math:`dc`
        """
        return cls({(coord,): 1}, chart)

    @classmethod
    def dt(cls, chart):
        return cls.coframe(TIME, chart)

    @classmethod
    def zero(cls, degree, chart):
        return cls({}, chart, degree=degree)

    # -- properties

    @property
    def order(self):
        """Highest jet order among coefficients and coframe elements
        """
        orders = [0]
        for key, coef in self.terms.items():
            orders.append(order_of(coef))
            orders.extend(c.order for c in key)
        return max(orders)

    def coefficient(self, *coords):
        """Return the coefficient of :math:`dc_1 \\wedge\\dots\\wedge dc_p`
        """
        sign, key = _sort_indices(coords)
        if not sign:
            return ZERO
        return sign * self.terms.get(key, ZERO)

    def is_zero(self):
        return not self.terms

    def pullback(self, chart):
        """Reinterpret this form on a chart of higher jet order
        """
        if chart.n != self.chart.n or chart.k < self.chart.k:
            raise ValueError("cannot pull {0!r} back to {1!r}".format(
                self.chart, chart))
        return type(self)(self.terms, chart, degree=self.degree)

    # -- algebra

    def _combine(self, other, sign):
        _check_same_chart(self.chart, other.chart)
        if other.degree != self.degree:
            raise DegreeError("cannot add forms of degree {0} and {1}".format(
                self.degree, other.degree))
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            terms[key] = terms.get(key, ZERO) + sign * coef
        return type(self)(terms, self.chart, degree=self.degree)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self * -1

    def __mul__(self, scalar):
        scalar = as_expr(scalar)
        return type(self)({k: scalar * v for k, v in self.terms.items()},
                          self.chart, degree=self.degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return (self.chart == other.chart and self.degree == other.degree and
                self.terms == other.terms)

    __hash__ = None

    def __call__(self, *fields):
        """Evaluate this form on ``degree`` vector fields
        """
        if len(fields) != self.degree:
            raise DegreeError("a {0}-form needs {0} vector fields".format(
                self.degree))
        out = self
        for field in fields:
            out = interior(field, out)
        return out

    def __str__(self):
        if not self.terms:
            return '0'
        return ' + '.join('({0}) {1}'.format(
            to_string(coef, self.chart),
            ' ^ '.join('d' + self.chart.label(c) for c in key)) for
            key, coef in self.terms.items())

    def __repr__(self):
        return '<DiffForm degree {0}: {1} on {2!r}>'.format(
            self.degree, self, self.chart)


def _as_form(a, chart):
    if isinstance(a, DiffForm):
        return a
    if chart is None:
        raise ValueError("a chart is required for a 0-form")
    return DiffForm({(): a}, chart, degree=0)


def _unwrap(form):
    if form.degree == 0:
        return form.terms.get((), ZERO)
    return form


# -- exterior calculus --------------------------------------------------------

def wedge(a, b):
    """Exterior product of two forms (or of a form and a scalar)
    """
    if not isinstance(a, DiffForm) and not isinstance(b, DiffForm):
        return simplify(as_expr(a) * as_expr(b))
    if not isinstance(a, DiffForm):
        return b * a
    if not isinstance(b, DiffForm):
        return a * b
    _check_same_chart(a.chart, b.chart)
    terms = {}
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            sign, key = _sort_indices(ia + ib)
            if sign:
                terms[key] = terms.get(key, ZERO) + sign * ca * cb
    return _unwrap(DiffForm(terms, a.chart, degree=a.degree + b.degree))


def exterior_d(a, chart=None):
    """Exterior derivative of a form (or of an expression, given a chart)

    The result lives on the same chart; coefficients of order ``k`` give
    rise to :math:`dy^i_{(k)}` terms but never to higher orders.
    """
    form = _as_form(a, chart)
    terms = {}
    for key, coef in form.terms.items():
        for c in coordinates(coef):
            sign, new = _sort_indices((c,) + key)
            if sign:
                terms[new] = terms.get(new, ZERO) + sign * sympy.diff(
                    coef, c.symbol)
    return DiffForm(terms, form.chart, degree=form.degree + 1)


def interior(X, a):
    """Contract the vector field ``X`` into the first slot of ``a``

    Returns an expression when ``a`` is a 1-form.
    """
    if not isinstance(a, DiffForm) or a.degree == 0:
        raise DegreeError("cannot contract a vector field into a 0-form")
    _check_same_chart(X.chart, a.chart)
    terms = {}
    for key, coef in a.terms.items():
        for pos, c in enumerate(key):
            comp = X[c]
            if comp == 0:
                continue
            new = key[:pos] + key[pos + 1:]
            terms[new] = terms.get(new, ZERO) + (-1) ** pos * comp * coef
    return _unwrap(DiffForm(terms, a.chart, degree=a.degree - 1))


def lie_derivative(X, a):
    """Lie derivative of a form (or expression) along ``X``

    Computed by Cartan's formula
    :math:`L_X = \\iota_X \\circ d + d \\circ \\iota_X`.
    """
    if not isinstance(a, DiffForm) or a.degree == 0:
        return X(_unwrap(_as_form(a, X.chart)))
    first = interior(X, exterior_d(a))
    second = exterior_d(interior(X, a), a.chart)
    if not isinstance(first, DiffForm):
        first = _as_form(first, a.chart)
    return first + second


def lie_bracket(X, Y):
    """Lie bracket :math:`[X, Y]^c = X(Y^c) - Y(X^c)`
    """
    chart = _check_same_chart(X.chart, Y.chart)
    coords = set(X.components) | set(Y.components)
    return VectorField({c: X(Y[c]) - Y(X[c]) for c in coords}, chart)


def is_holonomic(a, chart=None):
    """Test whether a form vanishes on the holonomic distribution

    A form is holonomic when its contraction (first slot) with each of the
    generators of the holonomic distribution vanishes; a 0-form is
    holonomic only if it vanishes identically.

    Parameters
    ----------
    a : `DiffForm` or `sympy.Expr`
        the form to test
    chart : `~noetherjet.jet.Chart`, optional
        the chart whose distribution to use, defaults to ``a.chart``

    Returns
    -------
    holonomic : `bool`
    """
    if not isinstance(a, DiffForm):
        return bool(is_zero(a))
    if a.degree == 0:
        return bool(is_zero(_unwrap(a)))
    chart = chart or a.chart
    if chart != a.chart:
        a = a.pullback(chart)
    d_dt, tops = holonomic_frame(chart)
    for field in [d_dt] + tops:
        contracted = interior(field, a)
        if isinstance(contracted, DiffForm):
            coefs = list(contracted.terms.values())
        else:
            coefs = [contracted]
        if not all(is_zero(c) for c in coefs):
            return False
    return True


def contact_decompose(a, chart=None):
    """Decompose a 1-form in the coframe
    :math:`\\{dt, \\omega^i_{(a)}, dy^j_{(k)}\\}`

    Parameters
    ----------
    a : `DiffForm`
        the 1-form to decompose
    chart : `~noetherjet.jet.Chart`, optional
        the chart to decompose on, defaults to ``a.chart``

    Returns
    -------
    lagrangian : `sympy.Expr`
        the :math:`dt` coefficient
    contact : `dict`
        map from ``(i, a)`` to the coefficient of
        :math:`\\omega^i_{(a)}`; zero entries are omitted
    top : `dict`
        map from fiber ``j`` to the coefficient of :math:`dy^j_{(k)}`;
        zero entries are omitted
    """
    if not isinstance(a, DiffForm) or a.degree != 1:
        raise DegreeError("contact decomposition needs a 1-form")
    chart = chart or a.chart
    if chart != a.chart:
        a = a.pullback(chart)
    lagrangian = ZERO
    contact = {}
    top = {}
    for (c,), coef in a.terms.items():
        if c.is_time:
            lagrangian += coef
        elif c.order < chart.k:
            contact[(c.fiber, c.order)] = coef
            lagrangian += coef * c.raised().symbol
        else:
            top[c.fiber] = coef
    return simplify(lagrangian), contact, top


def variationally_equivalent_1forms(a, b):
    """Test whether two 1-forms differ by a holonomic 1-form
    """
    if a.degree != 1 or b.degree != 1:
        raise DegreeError("variational equivalence is tested on 1-forms")
    return is_holonomic(a - b)


def form_from_decomposition(lagrangian, contact, top, chart):
    """Rebuild a 1-form from the output of `contact_decompose`
    """
    from .jet import contact_form
    out = DiffForm.dt(chart) * lagrangian
    for (i, a), coef in contact.items():
        out = out + contact_form(i, a, chart) * coef
    for j, coef in top.items():
        out = out + DiffForm.coframe(CoordId(j, chart.k), chart) * coef
    return out
