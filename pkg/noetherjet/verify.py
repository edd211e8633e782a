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

"""Numerical verification of Hamiltonian flows and constants of motion
"""

import multiprocessing
import warnings

from functools import partial

import h5py
import numpy

from .errors import (
    DomainError,
    PreconditionError,
)
from .expr import (
    TIME,
    as_expr,
    compile_numpy,
    coordinates,
    evaluate,
    to_string,
)
from .utils import chunks

__author__ = 'The noetherjet developers'

#: default integration window ``(t0, t1)``
DEFAULT_WINDOW = (0., 10.)

#: default integration step
DEFAULT_STEP = 1e-3

#: default tolerance on the drift of a constant of motion
DEFAULT_TOLERANCE = 1e-6


# -- trajectories -------------------------------------------------------------

class Trajectory(object):
    """A sampled solution of Hamilton's equations

    Parameters
    ----------
    times : `numpy.ndarray`
        strictly increasing times, on a uniform grid
    states : `numpy.ndarray`
        array of shape ``(len(times), n)`` holding the base coordinates
        :math:`y^i_{(0)}` in fiber order
    meta : `dict`, optional
        integrator parameters
    problem : `~noetherjet.noether.HamiltonianProblem`, optional
        the system this trajectory solves; when given, derivative
        coordinates are computed from Hamilton's equations instead of
        finite differences
    """
    __slots__ = ('times', 'states', 'meta', 'problem')

    def __init__(self, times, states, meta=None, problem=None):
        times = numpy.asarray(times, dtype=float)
        states = numpy.asarray(states, dtype=float)
        if states.ndim == 1:
            states = states[:, numpy.newaxis]
        if times.ndim != 1 or not times.size:
            raise ValueError("times must be a non-empty 1-D array")
        if states.shape[0] != times.size:
            raise ValueError("found {0} states for {1} times".format(
                states.shape[0], times.size))
        steps = numpy.diff(times)
        if (steps <= 0).any():
            raise ValueError("times must be strictly increasing")
        if steps.size and not numpy.allclose(steps, steps[0], rtol=1e-6,
                                             atol=0):
            raise ValueError("times must lie on a uniform grid")
        self.times = times
        self.states = states
        self.meta = dict(meta or {})
        self.problem = problem

    @property
    def step(self):
        if self.times.size < 2:
            return 0.
        return float(self.times[1] - self.times[0])

    def __len__(self):
        return self.times.size

    @property
    def final(self):
        return self.states[-1]

    def write(self, path, group=None):
        """Write this trajectory to an HDF5 file

        Parameters
        ----------
        path : `str`
            the target file, created if needed
        group : `str`, optional
            name of the group to write into, default: the file root
        """
        with h5py.File(str(path), 'a') as h5f:
            target = h5f.require_group(group) if group else h5f
            for name, data in (('times', self.times),
                               ('states', self.states)):
                if name in target:
                    del target[name]
                target.create_dataset(name, data=data)
            for key, value in self.meta.items():
                target.attrs[key] = value
            if self.problem is not None:
                target.attrs['hamiltonian'] = to_string(
                    self.problem.hamiltonian)
                target.attrs['n_dof'] = self.problem.n_dof
                target.attrs['k'] = self.problem.chart.k
        return path

    @classmethod
    def read(cls, path, group=None):
        """Read a trajectory written by `Trajectory.write`
        """
        from .noether import HamiltonianProblem
        with h5py.File(str(path), 'r') as h5f:
            source = h5f[group] if group else h5f
            times = source['times'][()]
            states = source['states'][()]
            meta = {key: value for key, value in source.attrs.items()}
        problem = None
        if 'hamiltonian' in meta:
            problem = HamiltonianProblem(
                str(meta.pop('hamiltonian')), n_dof=int(meta.pop('n_dof')),
                k=int(meta.pop('k')))
        return cls(times, states, meta=meta, problem=problem)


# -- integration --------------------------------------------------------------

def _vector(func, n):
    def call(y):
        out = numpy.array([numpy.broadcast_to(v, ()) for v in func(*y)],
                          dtype=float)
        return out.reshape(n)
    return call


def integrate_hamiltonian(hp, init, t0=DEFAULT_WINDOW[0],
                          t1=DEFAULT_WINDOW[1], dt=DEFAULT_STEP):
    """Integrate Hamilton's equations with the classical Runge-Kutta method

    The window is split into ``round((t1 - t0) / dt)`` equal steps, so the
    final time is exactly ``t1``.

    Parameters
    ----------
    hp : `~noetherjet.noether.HamiltonianProblem`
        the system to integrate
    init : `list` of `float`
        initial values of :math:`(q, p)` in fiber order
    t0, t1 : `float`, optional
        the integration window
    dt : `float`, optional
        the requested step

    Returns
    -------
    trajectory : `Trajectory`

    Raises
    ------
    noetherjet.errors.PreconditionError
        if ``dt <= 0`` or ``t1 <= t0``
    noetherjet.errors.DomainError
        if the Hamiltonian or its flow leaves the real domain
    """
    if dt <= 0:
        raise PreconditionError("integration step must be positive")
    if t1 <= t0:
        raise PreconditionError("integration window [{0}, {1}] is "
                                "empty".format(t0, t1))
    base = hp.chart.base_coordinates()
    init = numpy.asarray(init, dtype=float)
    if init.shape != (len(base),):
        raise ValueError("initial condition needs {0} values, not "
                         "{1}".format(len(base), init.size))
    evaluate(hp.hamiltonian, dict(zip(base, init)))
    rhs = _vector(compile_numpy(hp.equations_of_motion(), base), len(base))
    nsteps = max(1, int(round((t1 - t0) / dt)))
    h = (t1 - t0) / nsteps
    states = numpy.empty((nsteps + 1, len(base)))
    states[0] = y = init
    with numpy.errstate(all='ignore'):
        for i in range(1, nsteps + 1):
            k1 = rhs(y)
            k2 = rhs(y + h / 2 * k1)
            k3 = rhs(y + h / 2 * k2)
            k4 = rhs(y + h * k3)
            y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            if not numpy.isfinite(y).all():
                raise DomainError("flow left the real domain at "
                                  "t = {0}".format(t0 + i * h))
            states[i] = y
    times = t0 + h * numpy.arange(nsteps + 1)
    times[-1] = t1
    return Trajectory(times, states, meta={'method': 'rk4', 'step': h},
                      problem=hp)


# -- evaluation along trajectories --------------------------------------------

def _coordinate_arrays(traj, coords, method):
    """Values of each coordinate along ``traj``
    """
    out = {TIME: traj.times}
    base = {}
    for i in range(traj.states.shape[1]):
        base[i + 1] = traj.states[:, i]
    top = max([c.order for c in coords if not c.is_time] + [0])
    if method == 'flow' and top:
        derivs = traj.problem.flow_derivatives(top)
        keys = [c for c in coords if c in derivs]
        chart = traj.problem.chart
        func = compile_numpy([derivs[c] for c in keys],
                             chart.base_coordinates())
        values = func(*[base[c.fiber] for c in chart.base_coordinates()])
        for c, val in zip(keys, values):
            out[c] = numpy.broadcast_to(val, traj.times.shape)
    for c in coords:
        if c.is_time or c in out:
            continue
        if c.fiber not in base:
            raise ValueError("{0} is not a coordinate of this "
                             "trajectory".format(c))
        values = base[c.fiber]
        for _ in range(c.order):
            values = numpy.gradient(values, traj.step, edge_order=2)
        out[c] = values
    return out


def _evaluate_along(exprs, traj, method):
    exprs = [as_expr(e) for e in exprs]
    coords = sorted(set().union(*(coordinates(e) for e in exprs)))
    arrays = _coordinate_arrays(traj, coords, method)
    func = compile_numpy(exprs, coords)
    with numpy.errstate(all='ignore'):
        values = func(*[arrays[c] for c in coords])
    return [numpy.broadcast_to(numpy.asarray(v, dtype=float),
                               traj.times.shape) for v in values]


def _derivative_method(traj, method):
    if method == 'auto':
        method = 'flow' if traj.problem is not None else 'gradient'
    if method not in ('flow', 'gradient'):
        raise ValueError("unknown derivative method {0!r}".format(method))
    if method == 'flow' and traj.problem is None:
        raise ValueError("trajectory has no Hamiltonian to take flow "
                         "derivatives from")
    return method


class ConservationReport(object):
    """Drift of a function along a trajectory
    """
    __slots__ = ('integral', 'values', 'max_drift', 'tolerance')

    def __init__(self, integral, values, tolerance):
        self.integral = integral
        self.values = values
        self.max_drift = float(numpy.abs(values - values[0]).max())
        self.tolerance = tolerance

    @property
    def passed(self):
        return self.max_drift <= self.tolerance

    def __bool__(self):
        return self.passed

    def to_dict(self, chart=None):
        return {
            'integral': to_string(self.integral, chart),
            'max_drift': self.max_drift,
            'tolerance': self.tolerance,
            'pass': self.passed,
        }

    def __str__(self):
        return '{0}: max drift {1:.3e} ({2})'.format(
            to_string(self.integral), self.max_drift,
            'pass' if self.passed else 'fail')


def conservation_report(f, traj, tol=DEFAULT_TOLERANCE, method='auto'):
    """Measure how well ``f`` is conserved along ``traj``

    Parameters
    ----------
    f : `sympy.Expr`
        the candidate constant of motion
    traj : `Trajectory`
        the trajectory to evaluate along
    tol : `float`, optional
        the largest drift accepted

    Returns
    -------
    report : `ConservationReport`
        ``max_drift`` is :math:`\\max_t |f(t) - f(t_0)|`
    """
    method = _derivative_method(traj, method)
    values, = _evaluate_along([f], traj, method)
    return ConservationReport(as_expr(f), values, tol)


class ResidualReport(object):
    """Largest absolute value of each row of a system along a trajectory
    """
    __slots__ = ('labels', 'maxima', 'method')

    def __init__(self, labels, maxima, method):
        self.labels = list(labels)
        self.maxima = [float(m) for m in maxima]
        self.method = method

    @property
    def estimated(self):
        """`True` if derivative coordinates came from finite differences
        """
        return self.method == 'gradient'

    def max(self):
        return max(self.maxima, default=0.)

    def __getitem__(self, label):
        return self.maxima[self.labels.index(label)]

    def to_dict(self):
        return {
            'method': self.method,
            'residuals': dict(zip(self.labels, self.maxima)),
        }

    def __str__(self):
        lines = ['{0}: {1:.3e}'.format(label, value) for
                 label, value in zip(self.labels, self.maxima)]
        if self.estimated:
            lines.append('(derivatives estimated by finite differences)')
        return '\n'.join(lines)


def on_shell_residuals(system, traj, method='auto'):
    """Evaluate the rows of a system along a trajectory

    Parameters
    ----------
    system : `~noetherjet.euler_lagrange.SourceForm` or
             `~noetherjet.euler_lagrange.ProlongedSystem`
        the rows to evaluate
    traj : `Trajectory`
        the trajectory
    method : `str`, optional
        how to populate derivative coordinates: ``'flow'`` evaluates
        Hamilton's equations symbolically, ``'gradient'`` takes second-order
        central differences of the states, ``'auto'`` (default) uses
        ``'flow'`` when ``traj`` carries its Hamiltonian

    Returns
    -------
    report : `ResidualReport`
    """
    method = _derivative_method(traj, method)
    if method == 'gradient':
        warnings.warn("derivative coordinates estimated by finite "
                      "differences")
    if hasattr(system, 'sigma'):
        rows = list(system.sigma)
    else:
        rows = system.flat()
    if not rows:
        return ResidualReport([], [], method)
    values = _evaluate_along(rows, traj, method)
    return ResidualReport(system.labels(),
                          [numpy.abs(v).max() for v in values], method)


# -- batch verification -------------------------------------------------------

class VerificationResult(object):
    """Outcome of verifying one initial condition
    """
    __slots__ = ('initial', 'trajectory', 'conservation', 'residuals',
                 'tolerance')

    def __init__(self, initial, trajectory, conservation, residuals,
                 tolerance=DEFAULT_TOLERANCE):
        self.initial = list(initial)
        self.trajectory = trajectory
        self.conservation = conservation
        self.residuals = residuals
        self.tolerance = tolerance

    @property
    def passed(self):
        return (all(self.conservation) and
                self.residuals.max() <= self.tolerance)

    def to_dict(self, chart=None):
        return {
            'initial': self.initial,
            'conservation': [r.to_dict(chart) for r in self.conservation],
            'on_shell': self.residuals.to_dict(),
            'pass': self.passed,
        }


def verify_one(hp, init, integrals, t0=DEFAULT_WINDOW[0],
               t1=DEFAULT_WINDOW[1], dt=DEFAULT_STEP, tol=DEFAULT_TOLERANCE):
    """Integrate from ``init`` and check every integral along the flow
    """
    traj = integrate_hamiltonian(hp, init, t0=t0, t1=t1, dt=dt)
    reports = [conservation_report(f, traj, tol=tol) for f in integrals]
    residuals = on_shell_residuals(hp.system(), traj)
    return VerificationResult(init, traj, reports, residuals, tolerance=tol)


def _verify_chunk(hp, integrals, kwargs, inits):
    return [verify_one(hp, init, integrals, **kwargs) for init in inits]


def verify_batch(hp, inits, integrals, nproc=1, **kwargs):
    """Verify several initial conditions, optionally in parallel

    Parameters
    ----------
    hp : `~noetherjet.noether.HamiltonianProblem`
        the system to integrate
    inits : `list` of `list` of `float`
        the initial conditions
    integrals : `list` of `sympy.Expr`
        candidate constants of motion
    nproc : `int`, optional
        number of processes to use, default: ``1``
    **kwargs
        window, step and tolerance, passed to `verify_one`

    Returns
    -------
    results : `list` of `VerificationResult`
        in the order of ``inits``
    """
    inits = [list(init) for init in inits]
    worker = partial(_verify_chunk, hp, list(integrals), kwargs)
    if nproc > 1 and len(inits) > 1:
        # separate initial conditions into chunks and process each chunk
        with multiprocessing.Pool(processes=min(nproc, len(inits))) as pool:
            results = pool.map(worker, list(chunks(inits, nproc)))
        return [res for chunk in results for res in chunk]
    return worker(inits)
