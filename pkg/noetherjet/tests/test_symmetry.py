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

"""Tests for :mod:`noetherjet.symmetry`
"""

import pytest

from .. import symmetry
from ..errors import InvariantViolationError
from ..euler_lagrange import (
    el_source,
    poincare_cartan_form,
)
from ..expr import (
    TIME,
    CoordId,
    parse_expr,
)
from ..forms import (
    DiffForm,
    VectorField,
    lie_bracket,
)
from ..jet import (
    Chart,
    contact_form,
    holonomic_frame,
)
from ..noether import HamiltonianProblem
from . import corpus

HARMONIC = HamiltonianProblem('(p1^2 + q1^2)/2')
FREE = HamiltonianProblem('p1^2/2')
CHART = HARMONIC.chart


def y(i, a):
    return CoordId(i, a).symbol


def vtuple(chart, *components):
    return symmetry.as_vtuple([parse_expr(str(c), chart) for c in components],
                              chart)


def free_particle(n=2, k=2):
    chart = Chart(n, k)
    L = parse_expr(' + '.join('y{0}_1^2/2'.format(i) for
                              i in range(1, n + 1)), chart)
    return chart, poincare_cartan_form(L, chart), el_source(L, chart)


# -- reports ------------------------------------------------------------------

def test_check_report():
    chart = Chart(1, 1)
    report = symmetry.CheckReport('test', {'a': y(1, 0) - y(1, 0),
                                           'b': y(1, 1)}, chart=chart)
    assert not report
    assert not report.probabilistic
    assert report.failures() == {'b': y(1, 1)}
    assert report.to_dict() == {
        'check': 'test',
        'pass': False,
        'probabilistic': False,
        'residuals': {'b': 'y1_1'},
    }
    assert str(report) == 'test: fail\n  b = y1_1'


def test_check_report_probabilistic():
    residual = parse_expr('sin(y1_0)^2 + cos(y1_0)^2 - 1', Chart(1, 1))
    report = symmetry.CheckReport('trig', {'a': residual})
    assert report.passed
    assert report.probabilistic
    assert str(report) == 'trig: pass (probabilistic)'


# -- v-tuples -----------------------------------------------------------------

def test_vtuple():
    v = vtuple(CHART, 1, 'q1', 0)
    assert v.v0 == 1
    assert v.v == (y(1, 0), 0)
    assert v.components() == (1, y(1, 0), 0)
    assert str(v) == '(1, q1, 0)'
    assert v == vtuple(CHART, 1, 'q1', 0)
    assert v != vtuple(CHART, 1, 'q1', 1)
    assert symmetry.time_translation(CHART) == vtuple(CHART, 1, 0, 0)


def test_vtuple_invalid():
    with pytest.raises(ValueError):
        symmetry.VTuple(1, [0], CHART)
    with pytest.raises(ValueError):
        symmetry.as_vtuple([1, 0], CHART)
    with pytest.raises(InvariantViolationError):
        vtuple(CHART, 0, 'q1_2', 0)
    with pytest.raises(InvariantViolationError):
        vtuple(CHART, 0, 'q1_1', 0)
    with pytest.raises(InvariantViolationError):
        vtuple(CHART, 'p1_1', 0, 0)
    assert vtuple(Chart(1, 1), 0, 'y1_0').v == (y(1, 0),)


def test_vtuple_rejects_derivative_dependence():
    chart = Chart(2, 2)
    with pytest.raises(InvariantViolationError) as exc:
        vtuple(chart, 0, 'y1_1', 0)
    assert 'y1_2' in str(exc.value)
    X = VectorField(symmetry.prolongation_components(0, [y(1, 1), 0], chart),
                    chart)
    assert X[CoordId(1, 1)] == y(1, 2)
    report = symmetry.is_D_symmetry(X)
    assert report.failures() == {'omega^1_(1)([X, d/dy1_2])': -1}


@pytest.mark.parametrize('chart, components, field', [
    (Chart(1, 2), (1, 0), {TIME: 1}),
    (Chart(1, 1), (0, 1), {CoordId(1, 0): 1}),
    (Chart(1, 1), (0, 'y1_0'), {CoordId(1, 0): y(1, 0),
                                CoordId(1, 1): y(1, 1)}),
])
def test_prolong_v(chart, components, field):
    X = symmetry.prolong_v(vtuple(chart, *components))
    assert X == VectorField(field, chart)


def test_prolong_v_time_dependent():
    chart = Chart(1, 2)
    X = symmetry.prolong_v(vtuple(chart, 't', 0))
    assert X[TIME] == TIME.symbol
    assert X[CoordId(1, 0)] == 0
    assert X[CoordId(1, 1)] == -y(1, 1)
    assert X[CoordId(1, 2)] == -2 * y(1, 2)


def test_vtuple_round_trip():
    chart = Chart(2, 2)
    rng = corpus.generator(16)
    for _ in range(5):
        v = corpus.random_point_vtuple(rng, chart)
        assert symmetry.VTuple.from_field(symmetry.prolong_v(v)) == v


# -- D-symmetries -------------------------------------------------------------

def test_is_D_symmetry_prolongations():
    chart = Chart(2, 2)
    rng = corpus.generator(17)
    for _ in range(20):
        report = symmetry.is_D_symmetry(
            symmetry.prolong_v(corpus.random_point_vtuple(rng, chart)))
        assert report.passed
        assert not report.probabilistic


@pytest.mark.parametrize('k', [2, 3])
def test_is_D_symmetry_matches_vtuple_invariant(k):
    chart = Chart(2, k)
    rng = corpus.generator(20 + k)
    rejected = 0
    for order in [0] * 10 + [k - 1] * 10:
        v0, v = corpus.random_jet_vtuple(rng, chart, order)
        X = VectorField(symmetry.prolongation_components(v0, v, chart),
                        chart)
        report = symmetry.is_D_symmetry(X)
        try:
            symmetry.VTuple(v0, v, chart)
        except InvariantViolationError:
            rejected += 1
            assert not report
        else:
            assert report
    assert rejected


def test_is_D_symmetry_perturbed():
    chart = Chart(2, 2)
    rng = corpus.generator(18)
    lifted = [c for c in chart.coordinates() if not c.is_time and c.order]
    for _ in range(5):
        X = symmetry.prolong_v(corpus.random_point_vtuple(rng, chart))
        for c in lifted:
            components = dict(X.components)
            components[c] = X[c] + corpus.random_monomial(
                rng, chart.coordinates())
            assert not symmetry.is_D_symmetry(VectorField(components, chart))


def test_is_D_symmetry_fail():
    chart = Chart(1, 1)
    X = VectorField({CoordId(1, 0): 1, CoordId(1, 1): y(1, 0)}, chart)
    report = symmetry.is_D_symmetry(X)
    assert not report
    assert report.failures() == {'omega^1_(0)([X, d/dt])': y(1, 0)}


def test_is_D_symmetry_time_translation():
    chart = Chart(1, 2)
    X = symmetry.prolong_v(symmetry.time_translation(chart))
    assert symmetry.is_D_symmetry(X)
    # the truncated frame field itself does not preserve the distribution
    d_dt, _ = holonomic_frame(chart)
    report = symmetry.is_D_symmetry(d_dt)
    assert report.failures() == {'omega^1_(1)([X, d/dy1_2])': -1}


# -- action symmetries --------------------------------------------------------

@pytest.mark.parametrize('problem, components, result', [
    (HARMONIC, (1, 0, 0), True),
    (HARMONIC, (0, 1, 0), False),
    (FREE, (0, 1, 0), True),
    (FREE, (1, 0, 0), True),
    (HARMONIC, (0, 'p1', '-q1'), False),
])
def test_is_action_symmetry(problem, components, result):
    X = symmetry.prolong_v(vtuple(problem.chart, *components))
    assert bool(symmetry.is_action_symmetry(X, problem.alpha)) is result


def test_is_action_symmetry_residual():
    X = symmetry.prolong_v(vtuple(CHART, 0, 1, 0))
    report = symmetry.is_action_symmetry(X, HARMONIC.alpha)
    assert report.failures() == {'(L_X alpha)(d/dt)': -y(1, 0)}


def test_action_symmetries_close_under_brackets():
    chart, alpha, _ = free_particle()
    time = symmetry.prolong_v(vtuple(chart, 1, 0, 0))
    shift = symmetry.prolong_v(vtuple(chart, 0, 1, 0))
    rotation = symmetry.prolong_v(vtuple(chart, 0, '-y2_0', 'y1_0'))
    for X, Y in [(time, shift), (time, rotation), (shift, rotation)]:
        assert symmetry.is_action_symmetry(X, alpha)
        assert symmetry.is_action_symmetry(Y, alpha)
        assert symmetry.is_action_symmetry(lie_bracket(X, Y), alpha)
    assert lie_bracket(shift, rotation) == symmetry.prolong_v(
        vtuple(chart, 0, 0, 1))


# -- Poincare-Cartan forms ----------------------------------------------------

@pytest.mark.parametrize('components, result', [
    ((1, 0, 0), True),
    ((0, 1, 0), False),
    ((0, 'p1', '-q1'), False),
])
def test_check_pc_criterion(components, result):
    v = vtuple(CHART, *components)
    report = symmetry.check_pc_criterion(v, HARMONIC.alpha, HARMONIC.source)
    assert report.passed is result


def test_check_pc_criterion_null_source():
    chart = Chart(1, 2)
    L = parse_expr('y1_1', chart)
    alpha = poincare_cartan_form(L, chart)
    source = el_source(L, chart)
    assert source.is_null()
    assert symmetry.check_pc_criterion(vtuple(chart, 0, 1), alpha, source)
    assert not symmetry.check_pc_criterion(vtuple(chart, 0, 't'), alpha,
                                           source)


def test_check_pc_criterion_agrees_with_action_symmetry():
    chart, alpha, source = free_particle()
    rng = corpus.generator(19)
    cases = [vtuple(chart, 1, 0, 0), vtuple(chart, 0, 0, 1),
             vtuple(chart, 0, '-y2_0', 'y1_0'), vtuple(chart, 0, 'y1_0', 0),
             vtuple(chart, 't', 'y1_0', 'y2_0')]
    cases.extend(corpus.random_point_vtuple(rng, chart) for _ in range(3))
    for v in cases:
        X = symmetry.prolong_v(v)
        assert (bool(symmetry.check_pc_criterion(v, alpha, source)) is
                bool(symmetry.is_action_symmetry(X, alpha)))


def test_is_poincare_cartan_type():
    assert symmetry.is_poincare_cartan_type(HARMONIC.alpha)
    chart = Chart(1, 2)
    L = parse_expr('y1_1^2/2', chart)
    assert not symmetry.is_poincare_cartan_type(DiffForm.dt(chart) * L)
    assert symmetry.is_poincare_cartan_type(poincare_cartan_form(L, chart))
    assert not symmetry.is_poincare_cartan_type(
        HARMONIC.alpha + contact_form(1, 0, CHART))
    lifted = CHART.prolong(1)
    assert symmetry.is_poincare_cartan_type(HARMONIC.alpha, lifted)


# -- trivial symmetries -------------------------------------------------------

def test_is_trivial_symmetry():
    d_dt, tops = holonomic_frame(CHART)
    assert symmetry.is_trivial_symmetry(d_dt, HARMONIC.source)
    X = symmetry.prolong_v(vtuple(CHART, 0, 1, 0))
    assert not symmetry.is_trivial_symmetry(X, FREE.source)
    assert symmetry.is_trivial_symmetry(
        VectorField.partial(CHART.q(1, 1), CHART), HARMONIC.source)
    assert symmetry.is_trivial_symmetry(tops[1], FREE.source)


def test_is_alpha_symmetry():
    dt = symmetry.prolong_v(symmetry.time_translation(CHART))
    assert symmetry.is_alpha_symmetry(dt, HARMONIC.alpha)
    X = symmetry.prolong_v(vtuple(CHART, 0, 1, 0))
    assert not symmetry.is_alpha_symmetry(X, HARMONIC.alpha)
    assert symmetry.is_alpha_symmetry(X, FREE.alpha)


def test_is_alpha_trivial():
    P = VectorField.partial(CHART.p(1), CHART)
    assert symmetry.is_alpha_trivial(P, HARMONIC.alpha)
    dt = VectorField.partial(TIME, CHART)
    assert not symmetry.is_alpha_trivial(dt, HARMONIC.alpha)
