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

"""Euler-Lagrange source forms, their prolongations and regularity
"""

from collections import namedtuple

import numpy
from scipy.linalg import svdvals

from .errors import (
    DegreeError,
    MissingAssignmentError,
    NotSolvableError,
    OrderBudgetExceeded,
    SampleOffShellError,
)
from .expr import (
    TIME,
    ZERO,
    CoordId,
    as_expr,
    compile_numpy,
    coordinates,
    is_zero,
    order_of,
    partial,
    simplify,
    to_string,
)
from .forms import (
    DiffForm,
    contact_decompose,
    interior,
    wedge,
)
from .jet import (
    check_expr,
    contact_form,
    total_derivative,
)

__author__ = 'The noetherjet developers'

#: central finite-difference step of the regularity Jacobian
JACOBIAN_STEP = 1e-6

#: relative singular-value threshold for numerical rank
RANK_THRESHOLD = 1e-8

#: largest absolute row value accepted at an on-shell sample
ON_SHELL_TOLERANCE = 1e-8


# -- source forms -------------------------------------------------------------

class SourceForm(object):
    """The source form :math:`\\sigma = \\sigma_i\\,\\omega^i_{(0)}\\wedge dt`

    Parameters
    ----------
    sigma : `list` of `sympy.Expr`
        the ``n`` components :math:`\\sigma_i`
    chart : `~noetherjet.jet.Chart`
        the chart the components live on
    """
    __slots__ = ('sigma', 'chart')

    def __init__(self, sigma, chart):
        sigma = tuple(check_expr(simplify(s), chart) for s in sigma)
        if len(sigma) != chart.n:
            raise ValueError("a source form on {0!r} needs {1} components, "
                             "not {2}".format(chart, chart.n, len(sigma)))
        self.sigma = sigma
        self.chart = chart

    @property
    def order(self):
        """Highest jet order occurring in any component
        """
        return max(order_of(s) for s in self.sigma)

    def __len__(self):
        return len(self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    def __getitem__(self, i):
        return self.sigma[i]

    def __eq__(self, other):
        if not isinstance(other, SourceForm):
            return NotImplemented
        return self.chart == other.chart and self.sigma == other.sigma

    __hash__ = None

    def is_null(self):
        return all(s == 0 for s in self.sigma)

    def as_form(self):
        """Return this source form as a `~noetherjet.forms.DiffForm`
        """
        out = DiffForm.zero(2, self.chart)
        dt = DiffForm.dt(self.chart)
        for i, s in enumerate(self.sigma, start=1):
            out = out + wedge(contact_form(i, 0, self.chart), dt) * s
        return out

    def __call__(self, X, Y):
        """Evaluate :math:`\\sigma(X, Y)`
        """
        out = ZERO
        for i, s in enumerate(self.sigma, start=1):
            base = CoordId(i, 0)
            vel = CoordId(i, 1).symbol
            omega_x = X[base] - vel * X[TIME]
            omega_y = Y[base] - vel * Y[TIME]
            out += s * (omega_x * Y[TIME] - omega_y * X[TIME])
        return simplify(out)

    def labels(self):
        return ['sigma_' + self.chart.fiber_label(i) for
                i in range(1, self.chart.n + 1)]

    def __str__(self):
        return '\n'.join('{0} = {1}'.format(label, to_string(s, self.chart))
                         for label, s in zip(self.labels(), self.sigma))


class ProlongedSystem(object):
    """A source form together with its total derivatives

    ``rows[l][i]`` is :math:`(d/dt)^l \\sigma_{i+1}`.
    """
    __slots__ = ('rows', 'depth', 'chart')

    def __init__(self, rows, chart):
        self.rows = tuple(tuple(check_expr(simplify(e), chart) for e in row)
                          for row in rows)
        self.depth = len(self.rows) - 1
        self.chart = chart

    @property
    def order(self):
        return max(order_of(e) for e in self.flat())

    def flat(self):
        return [e for row in self.rows for e in row]

    def __iter__(self):
        return iter(self.flat())

    def __len__(self):
        return sum(map(len, self.rows))

    def labels(self):
        out = []
        for ell, row in enumerate(self.rows):
            for i in range(1, len(row) + 1):
                name = 'sigma_' + self.chart.fiber_label(i)
                if ell:
                    name = '(d/dt)^{0} {1}'.format(ell, name)
                out.append(name)
        return out

    def __str__(self):
        return '\n'.join('{0} = {1}'.format(label, to_string(e, self.chart))
                         for label, e in zip(self.labels(), self.flat()))


# -- the Euler-Lagrange operator ----------------------------------------------

def lagrangian_of(a):
    """Return the Lagrangian of the variational class of a 1-form

    This is the :math:`dt` coefficient of the contact decomposition of
    ``a``, pulled back to the chart of one higher order.
    """
    if not isinstance(a, DiffForm) or a.degree != 1:
        raise DegreeError("a Lagrangian is extracted from a 1-form")
    chart = a.chart.prolong(1)
    lagrangian, _, top = contact_decompose(a.pullback(chart), chart)
    assert not top, "pullback introduced top-order coframe elements"
    return lagrangian


def el_source(lagrangian, chart):
    """Compute the Euler-Lagrange source form of a Lagrangian

    Parameters
    ----------
    lagrangian : `sympy.Expr`
        a Lagrangian of order ``r``
    chart : `~noetherjet.jet.Chart`
        the working chart, of order ``k >= 2 * r``

    Returns
    -------
    source : `SourceForm`
        :math:`\\sigma_i = \\sum_a (-1)^a (d/dt)^a
        \\partial L/\\partial y^i_{(a)}`, using the prolonging total
        derivative

    Raises
    ------
    noetherjet.errors.OrderBudgetExceeded
        if ``2 * r > k``

    Examples
    --------
    >>> from noetherjet.euler_lagrange import el_source
    >>> from noetherjet.expr import parse_expr
    >>> from noetherjet.jet import Chart
    >>> chart = Chart(1, 2)
    >>> L = parse_expr('y1_1^2/2 - y1_0^2/2', chart)
    >>> print(el_source(L, chart))
    sigma_1 = -y1_0 - y1_2
    """
    lagrangian = as_expr(lagrangian)
    r = order_of(lagrangian)
    if 2 * r > chart.k:
        raise OrderBudgetExceeded(
            "a Lagrangian of order {0} needs a chart of order {1}, "
            "not {2}".format(r, 2 * r, chart.k))
    check_expr(lagrangian, chart)
    sigma = []
    for i in range(1, chart.n + 1):
        total = ZERO
        for a in range(r + 1):
            term = partial(lagrangian, CoordId(i, a))
            total += (-1) ** a * total_derivative(term, times=a)
        sigma.append(total)
    return SourceForm(sigma, chart)


def source_of_alpha(a, chart=None):
    """Return the unique source form of the variational class of ``a``
    """
    chart = chart or a.chart
    return el_source(lagrangian_of(a), chart)


def poincare_cartan_form(lagrangian, chart):
    """Return the Poincare-Cartan form of a Lagrangian

    .. math::

       \\alpha_o = L\\,dt + \\sum_i \\sum_{a=0}^{r-1} P^{(a)}_i
       \\omega^i_{(a)},\\qquad P^{(a)}_i = \\sum_{b=a+1}^{r}
       (-d/dt)^{b-a-1} \\partial L/\\partial y^i_{(b)}

    The result is a form of Poincare-Cartan type in the variational class
    of :math:`L\\,dt`.

    Raises
    ------
    noetherjet.errors.OrderBudgetExceeded
        if ``2 * r > k``
    """
    lagrangian = check_expr(as_expr(lagrangian), chart)
    r = order_of(lagrangian)
    if 2 * r > chart.k:
        raise OrderBudgetExceeded(
            "a Lagrangian of order {0} needs a chart of order {1}, "
            "not {2}".format(r, 2 * r, chart.k))
    out = DiffForm.dt(chart) * lagrangian
    for i in range(1, chart.n + 1):
        for a in range(r):
            momentum = ZERO
            for b in range(a + 1, r + 1):
                ell = b - a - 1
                momentum += (-1) ** ell * total_derivative(
                    partial(lagrangian, CoordId(i, b)), times=ell)
            out = out + contact_form(i, a, chart) * momentum
    return out


def is_source_form(form, chart=None):
    """Test the source-form conditions on a 2-form

    A 2-form is a source form when its contraction with every
    :math:`\\partial/\\partial y^j_{(a)}`, :math:`a \\geq 1`, vanishes.
    """
    from .forms import VectorField
    if not isinstance(form, DiffForm) or form.degree != 2:
        raise DegreeError("source forms are 2-forms")
    chart = chart or form.chart
    for i in range(1, chart.n + 1):
        for a in range(1, chart.k + 1):
            contracted = interior(VectorField.partial(CoordId(i, a), chart),
                                  form)
            if not all(is_zero(c) for c in contracted.terms.values()):
                return False
    return True


# -- prolongation -------------------------------------------------------------

def prolong_system(s, depth):
    """Prolong a source form by ``depth`` total derivatives

    Row ``l`` holds :math:`(d/dt)^l \\sigma_i`, computed with the
    prolonging total derivative; the system lives on a chart large enough
    to hold its highest row.
    """
    if depth < 0:
        raise ValueError("prolongation depth must be non-negative")
    rows = [list(s.sigma)]
    for _ in range(depth):
        rows.append([total_derivative(e) for e in rows[-1]])
    chart = s.chart.at_order(s.order + depth)
    return ProlongedSystem(rows, chart)


# -- regularity ---------------------------------------------------------------

RegularityReport = namedtuple(
    'RegularityReport', ('ranks', 'expected', 'regular', 'note'))


def _sample_vector(sample, coords):
    values = {}
    for key, val in sample.items():
        if isinstance(key, CoordId):
            values[key] = float(val)
        else:
            values[CoordId.from_name(getattr(key, 'name', key))] = float(val)
    try:
        return numpy.array([values[c] for c in coords], dtype=float)
    except KeyError as exc:
        raise MissingAssignmentError(
            "sample has no value for {0}".format(exc.args[0])) from exc


def regularity_probe(ps, samples, step=JACOBIAN_STEP,
                     threshold=RANK_THRESHOLD, tolerance=ON_SHELL_TOLERANCE):
    """Probe the rank of a prolonged system on its zero set

    Parameters
    ----------
    ps : `ProlongedSystem`
        the stacked rows to probe
    samples : `list` of `dict`
        points of the zero set, each mapping coordinates to values
    step : `float`, optional
        central finite-difference step
    threshold : `float`, optional
        singular values below ``threshold`` times the largest one count
        as zero
    tolerance : `float`, optional
        largest absolute row value accepted at a sample

    Returns
    -------
    report : `RegularityReport`
        the numerical rank at each sample, the rank ``n * (p + 1)``
        required for regularity, the verdict, and a note (``'no samples'``
        when ``samples`` is empty)

    Raises
    ------
    noetherjet.errors.SampleOffShellError
        if a row exceeds ``tolerance`` at any sample
    """
    rows = ps.flat()
    expected = len(rows)
    if not samples:
        return RegularityReport([], expected, True, 'no samples')
    coords = sorted(set().union(*(coordinates(e) for e in rows)))
    func = compile_numpy(rows, coords)

    def evaluate(x):
        return numpy.array([numpy.broadcast_to(v, ()) for v in func(*x)],
                           dtype=float)

    ranks = []
    for sample in samples:
        x0 = _sample_vector(sample, coords)
        residual = numpy.abs(evaluate(x0)).max(initial=0.)
        if residual > tolerance:
            raise SampleOffShellError(
                "sample is {0:.3g} away from the zero set".format(residual))
        jacobian = numpy.zeros((expected, len(coords)))
        for j in range(len(coords)):
            dx = numpy.zeros(len(coords))
            dx[j] = step
            jacobian[:, j] = (evaluate(x0 + dx) - evaluate(x0 - dx)) / (
                2 * step)
        singular = svdvals(jacobian) if jacobian.size else numpy.zeros(0)
        if singular.size and singular.max() > 0:
            ranks.append(int((singular > threshold * singular.max()).sum()))
        else:
            ranks.append(0)
    regular = all(rank == expected for rank in ranks)
    return RegularityReport(ranks, expected, regular, '')


# -- on-shell reduction -------------------------------------------------------

def solved_form(ps):
    """Solve each row of a prolonged system for one top-order coordinate

    Returns
    -------
    solutions : `dict`
        map from `~noetherjet.expr.CoordId` to its on-shell expression

    Raises
    ------
    noetherjet.errors.NotSolvableError
        if some row is not linear with unit coefficient in a highest-order
        coordinate not already solved for
    """
    solutions = {}
    for row in ps.flat():
        candidates = [c for c in coordinates(row) if not c.is_time]
        if not candidates:
            raise NotSolvableError("row {0} has no fiber coordinate".format(
                to_string(row, ps.chart)))
        top = max(c.order for c in candidates)
        for c in sorted(c for c in candidates if c.order == top):
            if c in solutions:
                continue
            coef = partial(row, c)
            if coef in (1, -1):
                solutions[c] = simplify(c.symbol - coef * row)
                break
        else:
            raise NotSolvableError(
                "row {0} is not solvable for a top-order coordinate with "
                "unit coefficient".format(to_string(row, ps.chart)))
    return solutions


def on_shell_reduce(e, ps):
    """Reduce ``e`` modulo the prolonged system ``ps``

    Each solved coordinate (see `solved_form`) is substituted into ``e``
    until none remains.
    """
    solutions = solved_form(ps)
    subs = {c.symbol: value for c, value in solutions.items()}
    e = simplify(e)
    for _ in range(len(subs) + 1):
        if not e.free_symbols & set(subs):
            return e
        e = simplify(e.xreplace(subs))
    raise NotSolvableError("on-shell substitution does not terminate")
