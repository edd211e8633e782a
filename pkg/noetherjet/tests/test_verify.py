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

"""Tests for :mod:`noetherjet.verify`
"""

import numpy
import pytest

from numpy import testing as nptest

from .. import verify
from ..errors import (
    DomainError,
    PreconditionError,
)
from ..expr import parse_expr
from ..noether import (
    HamiltonianProblem,
    noether_inverse_ansatz,
    noether_inverse_hamiltonian,
)

__author__ = 'The noetherjet developers'

HARMONIC = HamiltonianProblem('(p1^2 + q1^2)/2')
FREE = HamiltonianProblem('p1^2/2')
PENDULUM = HamiltonianProblem('p1^2/2 - cos(q1)')


def f_(src, problem=HARMONIC):
    return parse_expr(src, problem.chart)


def exact_harmonic(times):
    return numpy.column_stack((numpy.cos(times), -numpy.sin(times)))


# -- Trajectory ---------------------------------------------------------------

def test_trajectory():
    times = numpy.linspace(0, 1, 11)
    traj = verify.Trajectory(times, numpy.zeros(11))
    assert len(traj) == 11
    assert traj.states.shape == (11, 1)
    assert traj.step == pytest.approx(.1)
    assert traj.problem is None
    nptest.assert_array_equal(traj.final, [0.])

    # a single sample has no step
    assert verify.Trajectory([0.], [[1., 2.]]).step == 0.


@pytest.mark.parametrize('times, states', [
    ([], []),
    ([0, 1, 2], [[0], [1]]),
    ([0, 1, 1], [[0], [1], [2]]),
    ([0, 1, 3], [[0], [1], [2]]),
])
def test_trajectory_invalid(times, states):
    with pytest.raises(ValueError):
        verify.Trajectory(times, states)


def test_trajectory_write_read(tmpdir):
    path = str(tmpdir.join('trajectory.h5'))
    traj = verify.integrate_hamiltonian(HARMONIC, [1., 0.], t1=1., dt=.01)
    traj.write(path, group='trajectory0')
    verify.Trajectory(traj.times, traj.states).write(path, group='bare')

    new = verify.Trajectory.read(path, group='trajectory0')
    nptest.assert_array_equal(new.times, traj.times)
    nptest.assert_array_equal(new.states, traj.states)
    assert new.meta['method'] == 'rk4'
    assert new.meta['step'] == pytest.approx(.01)
    assert new.problem.hamiltonian == HARMONIC.hamiltonian
    assert new.problem.chart == HARMONIC.chart

    bare = verify.Trajectory.read(path, group='bare')
    assert bare.problem is None
    assert bare.meta == {}

    # writing again replaces the datasets
    traj.write(path, group='trajectory0')
    assert len(verify.Trajectory.read(path, group='trajectory0')) == len(traj)


# -- integration --------------------------------------------------------------

def test_integrate_harmonic_period():
    traj = verify.integrate_hamiltonian(
        HARMONIC, [1., 0.], t0=0., t1=2 * numpy.pi, dt=1e-3)
    assert traj.times[0] == 0.
    assert traj.times[-1] == 2 * numpy.pi
    assert traj.problem is HARMONIC
    nptest.assert_allclose(traj.final, [1., 0.], rtol=0, atol=1e-8)
    nptest.assert_allclose(traj.states, exact_harmonic(traj.times),
                           rtol=0, atol=1e-8)


def test_integrate_free_particle():
    traj = verify.integrate_hamiltonian(FREE, [0., 1.], t0=0., t1=1.,
                                        dt=1e-2)
    assert traj.final[0] == pytest.approx(1., abs=1e-12)
    assert traj.final[1] == pytest.approx(1., abs=1e-12)


def test_integrate_fourth_order():
    errors = []
    for dt in (1e-2, 5e-3):
        traj = verify.integrate_hamiltonian(
            HARMONIC, [1., 0.], t0=0., t1=2 * numpy.pi, dt=dt)
        errors.append(numpy.abs(traj.final - [1., 0.]).max())
    assert 12 <= errors[0] / errors[1] <= 20


def test_integrate_energy_drift():
    traj = verify.integrate_hamiltonian(HARMONIC, [1., 0.], t0=0., t1=10.,
                                        dt=1e-3)
    report = verify.conservation_report(HARMONIC.hamiltonian, traj, tol=1e-8)
    assert report.passed
    assert report.max_drift < 1e-8


def test_integrate_errors():
    with pytest.raises(PreconditionError):
        verify.integrate_hamiltonian(HARMONIC, [1., 0.], dt=0.)
    with pytest.raises(PreconditionError):
        verify.integrate_hamiltonian(HARMONIC, [1., 0.], t0=1., t1=1.)
    with pytest.raises(ValueError):
        verify.integrate_hamiltonian(HARMONIC, [1.])
    with pytest.raises(DomainError):
        verify.integrate_hamiltonian(HamiltonianProblem('p1^2/2 + ln(q1)'),
                                     [-1., 0.])


# -- evaluation along trajectories --------------------------------------------

def test_conservation_report():
    traj = verify.integrate_hamiltonian(HARMONIC, [1., 0.], t1=2., dt=1e-3)

    # q1 is not conserved, it falls from 1 to cos(2)
    report = verify.conservation_report(f_('q1'), traj)
    assert not report
    assert report.max_drift == pytest.approx(1 - numpy.cos(2.), abs=1e-6)
    assert report.to_dict(HARMONIC.chart) == {
        'integral': 'q1',
        'max_drift': report.max_drift,
        'tolerance': verify.DEFAULT_TOLERANCE,
        'pass': False,
    }
    assert str(report).endswith('(fail)')

    # derivative coordinates are filled from Hamilton's equations
    report = verify.conservation_report(f_('q1_1 - p1'), traj)
    assert report.passed
    assert report.max_drift == 0.


def test_on_shell_residuals_flow():
    traj = verify.integrate_hamiltonian(HARMONIC, [1., 0.], t1=1., dt=1e-2)
    report = verify.on_shell_residuals(HARMONIC.system(), traj)
    assert report.method == 'flow'
    assert not report.estimated
    assert report.labels == ['sigma_q1', 'sigma_p1',
                             '(d/dt)^1 sigma_q1', '(d/dt)^1 sigma_p1']
    assert report.max() < 1e-12
    assert report.to_dict()['method'] == 'flow'


def test_on_shell_residuals_gradient():
    times = numpy.linspace(0, 2 * numpy.pi, 2001)
    exact = verify.Trajectory(times, exact_harmonic(times))
    with pytest.warns(UserWarning):
        report = verify.on_shell_residuals(HARMONIC.source, exact)
    assert report.estimated
    assert report.max() < 1e-4
    assert 'finite differences' in str(report)

    # shift the momentum off shell
    states = exact_harmonic(times)
    states[:, 1] += .1
    shifted = verify.Trajectory(times, states)
    with pytest.warns(UserWarning):
        report = verify.on_shell_residuals(HARMONIC.source, shifted,
                                           method='gradient')
    assert report['sigma_p1'] >= .09
    assert report['sigma_q1'] < 1e-4


def test_on_shell_residuals_methods():
    times = numpy.linspace(0, 1, 11)
    traj = verify.Trajectory(times, numpy.zeros((11, 2)))
    with pytest.raises(ValueError):
        verify.on_shell_residuals(HARMONIC.source, traj, method='flow')
    with pytest.raises(ValueError):
        verify.on_shell_residuals(HARMONIC.source, traj, method='spline')


# -- batch verification -------------------------------------------------------

def test_verify_one():
    integrals = [HARMONIC.hamiltonian, f_('q1')]
    result = verify.verify_one(HARMONIC, [1., 0.], integrals, t1=1., dt=1e-3)
    assert [r.passed for r in result.conservation] == [True, False]
    assert not result.passed
    data = result.to_dict(HARMONIC.chart)
    assert data['initial'] == [1., 0.]
    assert data['pass'] is False
    assert [c['integral'] for c in data['conservation']] == [
        'q1^2/2 + p1^2/2', 'q1']

    result = verify.verify_one(HARMONIC, [0., 2.], integrals[:1], t1=1.,
                               dt=1e-3)
    assert result.passed


@pytest.mark.parametrize('nproc', [1, 2])
def test_verify_batch(nproc):
    inits = [[1., 0.], [0., 1.], [.5, -.5]]
    results = verify.verify_batch(HARMONIC, inits, [HARMONIC.hamiltonian],
                                  nproc=nproc, t1=1., dt=1e-3)
    assert [r.initial for r in results] == inits
    assert all(r.passed for r in results)
    for result, init in zip(results, inits):
        nptest.assert_array_equal(result.trajectory.states[0], init)


def test_verify_batch_worker_error():
    problem = HamiltonianProblem('p1^2/2 + ln(q1)')
    with pytest.raises(DomainError):
        verify.verify_batch(problem, [[1., 0.], [-1., 0.]],
                            [problem.hamiltonian], nproc=2, t1=.1, dt=1e-2)


# -- Noether pairs along trajectories -----------------------------------------

@pytest.mark.parametrize('problem, init', [
    (HARMONIC, [1., 0.]),
    (PENDULUM, [1., .5]),
])
def test_noether_inverse_hamiltonian_conserved(problem, init):
    pair = noether_inverse_hamiltonian(-problem.hamiltonian, problem)
    traj = verify.integrate_hamiltonian(problem, init, t0=0., t1=10.,
                                        dt=1e-3)
    report = verify.conservation_report(pair.total(), traj)
    assert report.max_drift < 1e-6


@pytest.mark.parametrize('problem, init, basis', [
    (HARMONIC, [1., 0.], ['1', 'q1', 'p1', 'q1_1']),
    (PENDULUM, [1., .5], ['1', 'q1', 'p1', 'q1_1', 'sin(q1)']),
])
def test_noether_inverse_ansatz_conserved(problem, init, basis):
    # the energy plus a multiple of Hamilton's momentum equation
    f = problem.hamiltonian + f_('q1 * (q1_1 - p1)', problem)
    pair = noether_inverse_ansatz(f, problem.source, problem.alpha,
                                  [f_(b, problem) for b in basis])
    assert pair.corrections
    traj = verify.integrate_hamiltonian(problem, init, t0=0., t1=10.,
                                        dt=1e-3)
    report = verify.conservation_report(pair.total(), traj)
    assert report.max_drift < 1e-6
    assert verify.conservation_report(f, traj).max_drift < 1e-6
    # each correction vanishes along the flow
    for g in pair.corrections:
        values = verify.conservation_report(g, traj).values
        assert numpy.abs(values).max() < 1e-8
