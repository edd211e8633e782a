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

"""Tests for :mod:`noetherjet.jet`
"""

import pytest

from .. import jet
from ..errors import (
    IndexOutOfRangeError,
    OrderBudgetExceeded,
    UnknownCoordinateError,
)
from ..expr import (
    TIME,
    CoordId,
    parse_expr,
    simplify,
)
from ..forms import (
    DiffForm,
    VectorField,
    exterior_d,
    wedge,
)
from . import corpus


def y(i, a):
    return CoordId(i, a).symbol


# -- charts -------------------------------------------------------------------

def test_chart():
    chart = jet.Chart(2, 3)
    assert chart.n == 2
    assert chart.k == 3
    assert not chart.hamiltonian
    assert len(chart.coordinates()) == 1 + 2 * 4
    assert chart.coordinates()[0] == TIME
    assert chart.base_coordinates() == [CoordId(1, 0), CoordId(2, 0)]
    assert chart.top_coordinates() == [CoordId(1, 3), CoordId(2, 3)]
    assert repr(chart) == 'Chart(n=2, k=3)'


@pytest.mark.parametrize('kwargs', [
    {'n': 0},
    {'n': 1, 'k': 0},
    {'n_dof': 0},
    {'n': 3, 'n_dof': 1},
    {},
])
def test_chart_invalid(kwargs):
    with pytest.raises(ValueError):
        jet.Chart(**kwargs)


def test_hamiltonian_chart():
    chart = jet.Chart(n_dof=2, k=1)
    assert chart.n == 4
    assert chart.hamiltonian
    assert chart.q(2) == CoordId(2, 0)
    assert chart.p(1, 1) == CoordId(3, 1)
    assert chart.label(CoordId(4, 1)) == 'p2_1'
    assert chart.label(CoordId(1, 0)) == 'q1'
    assert chart.label(TIME) == 't'
    assert chart.fiber_label(3) == 'p1'
    assert repr(chart) == 'Chart(n_dof=2, k=1)'
    with pytest.raises(IndexOutOfRangeError):
        chart.p(3)
    with pytest.raises(ValueError):
        jet.Chart(2, 1).q(1)


def test_chart_aliases():
    chart = jet.Chart(n_dof=1, k=1)
    aliases = chart.aliases()
    assert aliases['q1'] == aliases['q1_0'] == aliases['y1_0'] == y(1, 0)
    assert aliases['p1_1'] == y(2, 1)
    assert chart.print_aliases()['y2_2'] == 'p1_2'
    assert jet.Chart(1, 1).print_aliases() == {}


def test_chart_coord():
    chart = jet.Chart(1, 1)
    assert chart.coord(1, 1) == CoordId(1, 1)
    with pytest.raises(IndexOutOfRangeError):
        chart.coord(2, 0)
    with pytest.raises(IndexOutOfRangeError):
        chart.coord(1, 2)


@pytest.mark.parametrize('chart, dk, result', [
    (jet.Chart(1, 1), 1, jet.Chart(1, 2)),
    (jet.Chart(2, 2), 0, jet.Chart(2, 2)),
    (jet.Chart(n_dof=1, k=2), 2, jet.Chart(n_dof=1, k=4)),
])
def test_prolong_chart(chart, dk, result):
    assert jet.prolong_chart(chart, dk) == result
    assert chart.at_order(chart.k - 1) == chart


def test_prolong_chart_negative():
    with pytest.raises(ValueError):
        jet.Chart(1, 1).prolong(-1)


def test_check_expr():
    chart = jet.Chart(1, 1)
    assert jet.check_expr(y(1, 1), chart) == y(1, 1)
    with pytest.raises(OrderBudgetExceeded):
        jet.check_expr(y(1, 2), chart)
    with pytest.raises(UnknownCoordinateError):
        jet.check_expr(y(2, 0), chart)


# -- total derivatives --------------------------------------------------------

@pytest.mark.parametrize('src, result', [
    ('y1_0', 'y1_1'),
    ('t * y1_1', 'y1_1 + t * y1_2'),
    ('y1_1', 'y1_2'),
    ('t^2', '2 * t'),
])
def test_total_derivative(src, result):
    chart = jet.Chart(1, 2)
    e = parse_expr(src, jet.Chart(1, 1))
    assert jet.total_derivative(e) == parse_expr(result, chart)


def test_total_derivative_lagrangian_momentum():
    chart = jet.Chart(1, 1)
    L = parse_expr('y1_1^2/2 - y1_0^2/2', chart)
    momentum = simplify(L.diff(y(1, 1)))
    assert jet.total_derivative(momentum, chart) == y(1, 2)


def test_total_derivative_times():
    e = parse_expr('y1_0^2', jet.Chart(1, 1))
    twice = jet.total_derivative(e, times=2)
    assert twice == simplify(2 * y(1, 1) ** 2 + 2 * y(1, 0) * y(1, 2))
    with pytest.raises(OrderBudgetExceeded):
        jet.total_derivative(y(1, 2), jet.Chart(1, 1))


def test_total_derivative_chain_rule():
    chart = jet.Chart(2, 1)
    rng = corpus.generator(3)
    for _ in range(5):
        f = corpus.random_polynomial(rng, chart.coordinates())
        g = corpus.random_polynomial(rng, chart.coordinates())
        D = jet.total_derivative
        assert D(f * g) == simplify(D(f) * g + f * D(g))


def test_truncated_total_derivative():
    chart = jet.Chart(1, 1)
    e = parse_expr('t * y1_1 + y1_0^2', chart)
    assert jet.truncated_total_derivative(e, chart) == simplify(
        y(1, 1) + 2 * y(1, 0) * y(1, 1))


# -- frame and coframe --------------------------------------------------------

def test_holonomic_frame():
    chart = jet.Chart(1, 1)
    d_dt, tops = jet.holonomic_frame(chart)
    assert d_dt == VectorField({TIME: 1, CoordId(1, 0): y(1, 1)}, chart)
    assert tops == [VectorField.partial(CoordId(1, 1), chart)]


def test_holonomic_frame_size():
    chart = jet.Chart(2, 2)
    d_dt, tops = jet.holonomic_frame(chart)
    assert len(d_dt.components) == 1 + 2 * 2
    assert len(tops) == 2


def test_holonomic_frame_annihilates_contact_forms():
    chart = jet.Chart(2, 2)
    d_dt, tops = jet.holonomic_frame(chart)
    for i in (1, 2):
        for a in (0, 1):
            omega = jet.contact_form(i, a, chart)
            for field in [d_dt] + tops:
                assert omega(field) == 0


def test_contact_form():
    chart = jet.Chart(1, 1)
    omega = jet.contact_form(1, 0, chart)
    assert omega == (DiffForm.coframe(CoordId(1, 0), chart) -
                     DiffForm.dt(chart) * y(1, 1))


def test_contact_form_differential():
    chart = jet.Chart(1, 2)
    omega = exterior_d(jet.contact_form(1, 0, chart))
    assert omega == wedge(DiffForm.dt(chart), jet.contact_form(1, 1, chart))


@pytest.mark.parametrize('i, a', [
    (0, 0),
    (2, 0),
    (1, 1),
])
def test_contact_form_out_of_range(i, a):
    with pytest.raises(IndexOutOfRangeError):
        jet.contact_form(i, a, jet.Chart(1, 1))


def test_prolonged_chart_coordinates():
    chart = jet.prolong_chart(jet.Chart(1, 2), 1)
    assert CoordId(1, 3) in chart.coordinates()


def test_frame_field_is_truncated_total_derivative():
    chart = jet.Chart(2, 2)
    d_dt, _ = jet.holonomic_frame(chart)
    rng = corpus.generator(4)
    coords = [c for c in chart.coordinates() if c.order < chart.k]
    for _ in range(5):
        e = corpus.random_polynomial(rng, coords)
        assert exterior_d(e, chart)(d_dt) == jet.total_derivative(e)
        assert d_dt(e) == jet.truncated_total_derivative(e, chart)
