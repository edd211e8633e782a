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

"""Jet charts, total derivatives and the holonomic frame

Two flavours of total derivative are provided:

- `total_derivative` is the prolonging operator; it introduces the
  coordinates :math:`y^i_{(k+1)}` of the next jet order
- `truncated_total_derivative` is the frame field :math:`d/dt` of a fixed
  chart, which drops the :math:`y^i_{(k+1)}` terms
"""

import sympy

from .errors import (
    IndexOutOfRangeError,
    OrderBudgetExceeded,
    UnknownCoordinateError,
)
from .expr import (
    TIME,
    CoordId,
    as_expr,
    coordinates,
    simplify,
)

__author__ = 'The noetherjet developers'


# -- charts -------------------------------------------------------------------

class Chart(object):
    """Descriptor of an adapted coordinate chart on a jet space

    Parameters
    ----------
    n : `int`, optional
        fiber dimension, required unless ``n_dof`` is given
    k : `int`, optional
        jet order, default: ``1``
    n_dof : `int`, optional
        number of degrees of freedom of a Hamiltonian chart; fibers
        ``1..n_dof`` are then the positions ``q`` and fibers
        ``n_dof+1..2*n_dof`` the momenta ``p``

    Examples
    --------
    >>> from noetherjet.jet import Chart
    >>> chart = Chart(n_dof=1, k=2)
    >>> chart.n
    2
    >>> chart.label(chart.coord(2, 1))
    'p1_1'
    """
    __slots__ = ('n', 'k', 'n_dof')

    def __init__(self, n=None, k=1, n_dof=None):
        if n_dof is not None:
            n_dof = int(n_dof)
            if n_dof < 1:
                raise ValueError("n_dof must be at least 1")
            if n is None:
                n = 2 * n_dof
            elif int(n) != 2 * n_dof:
                raise ValueError("a Hamiltonian chart needs n = 2 * n_dof")
        if n is None or int(n) < 1:
            raise ValueError("fiber dimension n must be at least 1")
        if int(k) < 1:
            raise ValueError("jet order k must be at least 1")
        self.n = int(n)
        self.k = int(k)
        self.n_dof = n_dof

    @property
    def hamiltonian(self):
        return self.n_dof is not None

    def _key(self):
        return (self.n, self.k, self.n_dof)

    def __eq__(self, other):
        if not isinstance(other, Chart):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.hamiltonian:
            return 'Chart(n_dof={0.n_dof}, k={0.k})'.format(self)
        return 'Chart(n={0.n}, k={0.k})'.format(self)

    # -- coordinates

    def coord(self, i, a=0):
        """Return the coordinate :math:`y^i_{(a)}` of this chart
        """
        if not 1 <= i <= self.n or not 0 <= a <= self.k:
            raise IndexOutOfRangeError(
                "y{0}_{1} is not a coordinate of {2!r}".format(i, a, self))
        return CoordId(i, a)

    def q(self, i, a=0):
        self._require_hamiltonian()
        if not 1 <= i <= self.n_dof:
            raise IndexOutOfRangeError("no position q{0} in {1!r}".format(
                i, self))
        return self.coord(i, a)

    def p(self, j, a=0):
        self._require_hamiltonian()
        if not 1 <= j <= self.n_dof:
            raise IndexOutOfRangeError("no momentum p{0} in {1!r}".format(
                j, self))
        return self.coord(self.n_dof + j, a)

    def _require_hamiltonian(self):
        if not self.hamiltonian:
            raise ValueError("{0!r} is not a Hamiltonian chart".format(self))

    def coordinates(self):
        """All coordinates of this chart, in the fixed total order
        """
        return [TIME] + [CoordId(i, a) for i in range(1, self.n + 1) for
                         a in range(self.k + 1)]

    def base_coordinates(self):
        return [CoordId(i, 0) for i in range(1, self.n + 1)]

    def top_coordinates(self):
        return [CoordId(i, self.k) for i in range(1, self.n + 1)]

    def contains(self, c):
        return c.is_time or (c.fiber <= self.n and c.order <= self.k)

    # -- labels

    def fiber_label(self, i):
        """Human-readable name of fiber ``i`` (``'1'``, or ``'q1'``/``'p1'``)
        """
        if not self.hamiltonian:
            return str(i)
        if i <= self.n_dof:
            return 'q{0}'.format(i)
        return 'p{0}'.format(i - self.n_dof)

    def label(self, c):
        """Human-readable name of a coordinate, with Hamiltonian aliases
        """
        if c.is_time or not self.hamiltonian:
            return c.name
        base = self.fiber_label(c.fiber)
        if c.order:
            return '{0}_{1}'.format(base, c.order)
        return base

    def aliases(self):
        """Map every name accepted by the parser to its coordinate symbol
        """
        names = {c.name: c.symbol for c in self.coordinates()}
        if self.hamiltonian:
            for c in self.coordinates()[1:]:
                names[self.label(c)] = c.symbol
                names['{0}_{1}'.format(self.fiber_label(c.fiber),
                                       c.order)] = c.symbol
        return names

    def print_aliases(self):
        """Map canonical symbol names to printed labels

        Coordinates of prolonged orders are included so that expressions
        living one or two orders above the chart print consistently.
        """
        if not self.hamiltonian:
            return {}
        return {CoordId(i, a).name: self.label(CoordId(i, a)) for
                i in range(1, self.n + 1) for a in range(self.k + 3)}

    # -- prolongation

    def prolong(self, dk=1):
        """Return the chart of the same fibers at jet order ``k + dk``
        """
        if dk < 0:
            raise ValueError("cannot prolong by a negative order")
        return type(self)(n=self.n, k=self.k + dk, n_dof=self.n_dof)

    def at_order(self, k):
        """Return this chart at jet order ``max(k, self.k)``
        """
        return self.prolong(max(0, k - self.k))


def prolong_chart(chart, dk):
    """Return ``chart`` prolonged by ``dk`` jet orders
    """
    return chart.prolong(dk)


def check_expr(e, chart):
    """Check that ``e`` is defined on ``chart``

    Raises
    ------
    noetherjet.errors.UnknownCoordinateError
        if ``e`` uses a fiber that ``chart`` does not have
    noetherjet.errors.OrderBudgetExceeded
        if ``e`` has a higher order than ``chart``
    """
    for c in coordinates(e):
        if c.fiber > chart.n:
            raise UnknownCoordinateError(
                "{0} is not a coordinate of {1!r}".format(c, chart))
        if c.order > chart.k:
            raise OrderBudgetExceeded(
                "{0} exceeds the order of {1!r}".format(c, chart))
    return e


# -- total derivatives --------------------------------------------------------

def total_derivative(e, chart=None, times=1):
    """Apply the prolonging total derivative :math:`d/dt` to ``e``

    Parameters
    ----------
    e : `sympy.Expr`
        the expression to differentiate
    chart : `Chart`, optional
        if given, ``e`` is checked to be defined on ``chart``; the result
        then lives on ``prolong_chart(chart, times)``
    times : `int`, optional
        number of times to apply the operator, default: ``1``

    Returns
    -------
    de : `sympy.Expr`
        :math:`\\partial_t e + \\sum y^i_{(a+1)} \\partial e/\\partial
        y^i_{(a)}`, in canonical form
    """
    e = as_expr(e)
    if chart is not None:
        check_expr(e, chart)
    for _ in range(times):
        out = sympy.diff(e, TIME.symbol)
        for c in coordinates(e):
            if not c.is_time:
                out += c.raised().symbol * sympy.diff(e, c.symbol)
        e = simplify(out)
    return e


def truncated_total_derivative(e, chart, times=1):
    """Apply the frame field :math:`d/dt` of ``chart`` to ``e``

    This is `total_derivative` with the convention
    :math:`y^i_{(k+1)} = 0`: derivatives with respect to the top-order
    coordinates do not contribute.
    """
    e = check_expr(as_expr(e), chart)
    for _ in range(times):
        out = sympy.diff(e, TIME.symbol)
        for c in coordinates(e):
            if not c.is_time and c.order < chart.k:
                out += c.raised().symbol * sympy.diff(e, c.symbol)
        e = simplify(out)
    return e


# -- frame and coframe --------------------------------------------------------

def holonomic_frame(chart):
    """Return the generators of the holonomic distribution of ``chart``

    Returns
    -------
    d_dt : `~noetherjet.forms.VectorField`
        the truncated total derivative
        :math:`\\partial_t + \\sum_{a<k} y^j_{(a+1)}\\partial/\\partial
        y^j_{(a)}`
    tops : `list` of `~noetherjet.forms.VectorField`
        the ``n`` fields :math:`\\partial/\\partial y^i_{(k)}`
    """
    from .forms import VectorField
    components = {TIME: 1}
    for i in range(1, chart.n + 1):
        for a in range(chart.k):
            components[CoordId(i, a)] = CoordId(i, a + 1).symbol
    d_dt = VectorField(components, chart)
    tops = [VectorField.partial(c, chart) for c in chart.top_coordinates()]
    return d_dt, tops


def contact_form(i, a, chart):
    """Return the contact form
    :math:`\\omega^i_{(a)} = dy^i_{(a)} - y^i_{(a+1)} dt`

    Raises
    ------
    noetherjet.errors.IndexOutOfRangeError
        unless ``1 <= i <= n`` and ``0 <= a <= k - 1``
    """
    from .forms import DiffForm
    if not 1 <= i <= chart.n or not 0 <= a < chart.k:
        raise IndexOutOfRangeError(
            "no contact form omega^{0}_({1}) on {2!r}".format(i, a, chart))
    return DiffForm({
        (CoordId(i, a),): 1,
        (TIME,): -CoordId(i, a + 1).symbol,
    }, chart)
