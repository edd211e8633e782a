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

"""Infinitesimal symmetries of the holonomic distribution and of actions
"""

from .errors import InvariantViolationError
from .euler_lagrange import source_of_alpha
from .expr import (
    TIME,
    CoordId,
    as_expr,
    coordinates,
    is_zero,
    simplify,
    to_string,
)
from .forms import (
    DiffForm,
    VectorField,
    exterior_d,
    interior,
    is_holonomic,
    lie_bracket,
    lie_derivative,
)
from .jet import (
    check_expr,
    contact_form,
    holonomic_frame,
    total_derivative,
    truncated_total_derivative,
)

__author__ = 'The noetherjet developers'


# -- reports ------------------------------------------------------------------

class CheckReport(object):
    """Result of a symbolic check made of several residuals

    A check passes when every residual vanishes. Residuals are tested for
    zero canonically first and by random sampling second; ``probabilistic``
    is `True` when any residual needed the sampling path.

    Parameters
    ----------
    name : `str`
        short description of the check
    residuals : `dict`
        map from a label to a residual expression
    chart : `~noetherjet.jet.Chart`, optional
        chart used to label coordinates when printing
    """
    __slots__ = ('name', 'residuals', 'verdicts', 'chart')

    def __init__(self, name, residuals, chart=None):
        self.name = name
        self.residuals = {key: simplify(val) for key, val in
                          residuals.items()}
        self.verdicts = {key: is_zero(val) for key, val in
                         self.residuals.items()}
        self.chart = chart

    @property
    def passed(self):
        return all(self.verdicts.values())

    @property
    def probabilistic(self):
        return any(v.probabilistic for v in self.verdicts.values())

    def __bool__(self):
        return self.passed

    def failures(self):
        """Return the residuals that do not vanish
        """
        return {key: self.residuals[key] for key, verdict in
                self.verdicts.items() if not verdict}

    def to_dict(self):
        return {
            'check': self.name,
            'pass': self.passed,
            'probabilistic': self.probabilistic,
            'residuals': {key: to_string(val, self.chart) for
                          key, val in self.residuals.items() if val != 0},
        }

    def __str__(self):
        status = 'pass' if self.passed else 'fail'
        if self.passed and self.probabilistic:
            status += ' (probabilistic)'
        lines = ['{0}: {1}'.format(self.name, status)]
        for key, val in self.failures().items():
            lines.append('  {0} = {1}'.format(key, to_string(val, self.chart)))
        return '\n'.join(lines)


# -- v-tuples -----------------------------------------------------------------

class VTuple(object):
    """The base data :math:`v = (v^0, v^1, \\dots, v^n)` of a D-symmetry

    Parameters
    ----------
    v0 : `sympy.Expr`
        the time component
    v : `list` of `sympy.Expr`
        the ``n`` fiber components
    chart : `~noetherjet.jet.Chart`
        the chart of the symmetry

    Raises
    ------
    noetherjet.errors.InvariantViolationError
        if the time component, or a prolonged component
        :math:`v^i_{(a)}` with :math:`a < k`, depends on a top-order
        coordinate of ``chart``

    Notes
    -----
    Independence of ``v`` from :math:`y_{(k)}` alone is not enough on a
    finite jet: :math:`X_v` preserves the holonomic distribution exactly
    when all of its components below the top order are free of
    :math:`y_{(k)}`. For instance ``(0, y1_1, 0)`` on a chart of order 2
    is rejected, since :math:`v^1_{(1)} = y^1_{(2)}`.
    """
    __slots__ = ('v0', 'v', 'chart', 'prolonged')

    def __init__(self, v0, v, chart):
        v = tuple(simplify(vi) for vi in v)
        if len(v) != chart.n:
            raise ValueError("a v-tuple on {0!r} needs {1} fiber components, "
                             "not {2}".format(chart, chart.n, len(v)))
        v0 = simplify(v0)
        for comp in (v0,) + v:
            check_expr(comp, chart)
        prolonged = prolongation_components(v0, v, chart)
        for c, comp in prolonged.items():
            if not c.is_time and c.order == chart.k:
                continue
            top = _top_dependence(comp, chart)
            if top:
                raise InvariantViolationError(
                    "v-tuple {0} is not admissible: the {1} component of its "
                    "prolongation, {2}, depends on the top-order coordinate "
                    "{3}".format(_format_components((v0,) + v, chart),
                                 chart.label(c), to_string(comp, chart),
                                 chart.label(top[0])))
        self.v0 = v0
        self.v = v
        self.chart = chart
        self.prolonged = prolonged

    @classmethod
    def from_field(cls, X):
        """Extract the v-tuple of a vector field
        """
        return cls(X[TIME], [X[c] for c in X.chart.base_coordinates()],
                   X.chart)

    def components(self):
        return (self.v0,) + self.v

    def __eq__(self, other):
        if not isinstance(other, VTuple):
            return NotImplemented
        return (self.chart == other.chart and
                self.components() == other.components())

    __hash__ = None

    def __str__(self):
        return _format_components(self.components(), self.chart)


def _format_components(components, chart):
    return '({0})'.format(', '.join(to_string(c, chart) for
                                    c in components))


def _top_dependence(e, chart):
    return sorted(c for c in coordinates(e) if
                  not c.is_time and c.order == chart.k)


def prolongation_components(v0, v, chart):
    """Compute every component of :math:`X_v` from raw base data

    The prolonged components are
    :math:`v^i_{(a)} = (d/dt)^a (v^i - y^i_{(1)} v^0) + y^i_{(a+1)} v^0`,
    computed with the truncated frame derivative of the chart, so that
    :math:`y^i_{(k+1)} = 0`. No admissibility check is made.

    Returns
    -------
    components : `dict`
        map from `~noetherjet.expr.CoordId` to `sympy.Expr`
    """
    v0 = simplify(v0)
    components = {TIME: v0}
    for i, vi in enumerate(v, start=1):
        vi = simplify(vi)
        components[CoordId(i, 0)] = vi
        current = vi - CoordId(i, 1).symbol * v0
        for a in range(1, chart.k + 1):
            current = truncated_total_derivative(current, chart)
            top = CoordId(i, a + 1).symbol if a < chart.k else 0
            components[CoordId(i, a)] = simplify(current + top * v0)
    return components


def prolong_v(v, chart=None):
    """Build the D-symmetry :math:`X_v` of a v-tuple

    Parameters
    ----------
    v : `VTuple`
        the base data
    chart : `~noetherjet.jet.Chart`, optional
        defaults to ``v.chart``

    Returns
    -------
    X : `~noetherjet.forms.VectorField`

    See also
    --------
    prolongation_components
        for the formula
    """
    chart = chart or v.chart
    if chart == v.chart:
        return VectorField(dict(v.prolonged), chart)
    return VectorField(prolongation_components(v.v0, v.v, chart), chart)


# -- symmetry tests -----------------------------------------------------------

def _contact_residuals(Z, chart, label):
    out = {}
    for i in range(1, chart.n + 1):
        for a in range(chart.k):
            key = 'omega^{0}_({1})({2})'.format(chart.fiber_label(i), a, label)
            out[key] = contact_form(i, a, chart)(Z)
    return out


def is_D_symmetry(X, chart=None):
    """Test whether ``X`` preserves the holonomic distribution

    Every contact form :math:`\\omega^i_{(a)}`, :math:`a < k`, is
    evaluated on the brackets :math:`[X, d/dt]` and
    :math:`[X, \\partial/\\partial y^j_{(k)}]`; all must vanish.

    Returns
    -------
    report : `CheckReport`
    """
    chart = chart or X.chart
    d_dt, tops = holonomic_frame(chart)
    residuals = _contact_residuals(lie_bracket(X, d_dt), chart, '[X, d/dt]')
    for field, c in zip(tops, chart.top_coordinates()):
        residuals.update(_contact_residuals(
            lie_bracket(X, field), chart,
            '[X, d/d{0}]'.format(chart.label(c))))
    return CheckReport('D-symmetry', residuals, chart=chart)


def is_action_symmetry(X, a):
    """Test whether ``X`` is an infinitesimal symmetry of the action of ``a``

    The residuals are :math:`(L_X a)(d/dt)` and
    :math:`(L_X a)(\\partial/\\partial y^j_{(k)})`.
    ``X`` is assumed to be a D-symmetry.

    Returns
    -------
    report : `CheckReport`
    """
    chart = a.chart
    lie = lie_derivative(X, a)
    d_dt, tops = holonomic_frame(chart)
    residuals = {'(L_X alpha)(d/dt)': lie(d_dt)}
    for field, c in zip(tops, chart.top_coordinates()):
        key = '(L_X alpha)(d/d{0})'.format(chart.label(c))
        residuals[key] = lie(field)
    return CheckReport('action symmetry', residuals, chart=chart)


def check_pc_criterion(v, a_o, s):
    """Test the symmetry criterion for a form of Poincare-Cartan type

    The residual is
    :math:`d/dt(\\alpha_o(X_v)) - \\sigma(d/dt, X_v)`, with the prolonging
    total derivative on the left and the frame field on the right.

    Returns
    -------
    report : `CheckReport`
    """
    chart = a_o.chart
    X = prolong_v(v, chart)
    d_dt, _ = holonomic_frame(chart)
    residual = total_derivative(a_o(X)) - s(d_dt, X)
    return CheckReport('Poincare-Cartan criterion',
                       {'d/dt(alpha_o(X)) - sigma(d/dt, X)': residual},
                       chart=chart)


def is_poincare_cartan_type(a, chart=None):
    """Test whether :math:`da` is a source form modulo a holonomic 2-form
    """
    chart = chart or a.chart
    if chart != a.chart:
        a = a.pullback(chart)
    source = source_of_alpha(a, chart)
    return is_holonomic(exterior_d(a) - source.as_form(), chart)


def is_trivial_symmetry(X, s):
    """Test whether :math:`\\sigma(X, d/dt)` vanishes identically
    """
    d_dt, _ = holonomic_frame(s.chart)
    return bool(is_zero(s(X, d_dt)))


def is_alpha_symmetry(X, a_o):
    """Test whether ``X`` leaves the representative ``a_o`` invariant
    """
    lie = lie_derivative(X, a_o)
    if isinstance(lie, DiffForm):
        return all(is_zero(c) for c in lie.terms.values())
    return bool(is_zero(lie))


def is_alpha_trivial(X, a_o):
    """Test whether :math:`\\iota_X \\alpha_o` vanishes identically

    Such symmetries have the zero constant of motion.
    """
    return bool(is_zero(interior(X, a_o)))


def time_translation(chart):
    """The v-tuple :math:`(1, 0, \\dots, 0)` of time translations
    """
    return VTuple(1, [0] * chart.n, chart)


def as_vtuple(components, chart):
    """Build a `VTuple` from ``n + 1`` expressions or numbers
    """
    components = [as_expr(c) for c in components]
    if len(components) != chart.n + 1:
        raise ValueError("a v-tuple on {0!r} has {1} components, "
                         "not {2}".format(chart, chart.n + 1, len(components)))
    return VTuple(components[0], components[1:], chart)
