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

"""Problem files for the noetherjet command-line interface

A problem file is a JSON document. Expressions are strings in the
expression grammar of :mod:`noetherjet.expr`, read on the chart declared
in the file::

    {
        "kind": "hamiltonian",
        "chart": {"n_dof": 1, "k": 2},
        "hamiltonian": "(p1^2 + q1^2)/2",
        "symmetry": ["1", "0", "0"],
        "first_integrals": ["(p1^2 + q1^2)/2", "q1"],
        "initial_conditions": [[1, 0], {"q1": 0, "p1": 2}],
        "window": {"t0": 0, "t1": 10, "dt": 0.001}
    }

``kind`` is one of ``lagrangian`` (with a ``lagrangian`` expression),
``hamiltonian`` (with a ``hamiltonian`` expression on a chart declaring
``n_dof``) or ``one_form`` (with a ``one_form`` list of
``[coefficient, coframe]`` pairs such as ``["p1", "dq1"]``).
"""

import json

from .errors import (
    ProblemFileError,
    UnknownCoordinateError,
)
from .euler_lagrange import (
    el_source,
    lagrangian_of,
    poincare_cartan_form,
    source_of_alpha,
)
from .expr import (
    CoordId,
    parse_expr,
)
from .forms import (
    DiffForm,
    VectorField,
)
from .jet import Chart
from .noether import HamiltonianProblem
from .symmetry import (
    as_vtuple,
    is_poincare_cartan_type,
    prolong_v,
)

__author__ = 'The noetherjet developers'

KINDS = ('lagrangian', 'hamiltonian', 'one_form')

#: jet order used when a problem file does not declare one
DEFAULT_ORDER = 2


def _coordinate_names(chart):
    return {name: CoordId.from_symbol(symbol) for
            name, symbol in chart.aliases().items()}


def _lookup(name, chart):
    try:
        return _coordinate_names(chart)[name.strip()]
    except KeyError:
        raise UnknownCoordinateError(
            "{0!r} is not a coordinate of {1!r}".format(name, chart))


def _require(data, key, kind=None):
    try:
        return data[key]
    except KeyError:
        if kind:
            raise ProblemFileError("{0} problems require a {1!r} "
                                   "entry".format(kind, key))
        raise ProblemFileError("problem file has no {0!r} entry".format(key))


def _as_list(value, key):
    if isinstance(value, str):
        return [value]
    if not isinstance(value, list):
        raise ProblemFileError("{0!r} must be a string or a list".format(key))
    return value


def _parse_chart(data, chart_order=None):
    if not isinstance(data, dict):
        raise ProblemFileError("'chart' must be an object")
    k = data.get('k', DEFAULT_ORDER) if chart_order is None else chart_order
    try:
        return Chart(n=data.get('n'), k=k, n_dof=data.get('n_dof'))
    except (TypeError, ValueError) as exc:
        raise ProblemFileError("invalid chart {0}: {1}".format(data, exc))


def parse_one_form(pairs, chart):
    """Parse a list of ``[coefficient, coframe]`` pairs into a 1-form

    Coframe elements are written ``dt``, ``dy1_0``, ``dq1`` or ``dp1_1``.
    """
    if not isinstance(pairs, list):
        raise ProblemFileError("a one_form is a list of [coefficient, "
                               "coframe] pairs")
    terms = {}
    for pair in pairs:
        try:
            coef, element = pair
        except (TypeError, ValueError):
            raise ProblemFileError("malformed one_form term {0!r}".format(
                pair))
        element = str(element).strip()
        if not element.startswith('d'):
            raise ProblemFileError("coframe element {0!r} does not start "
                                   "with 'd'".format(element))
        c = _lookup(element[1:], chart)
        terms[(c,)] = terms.get((c,), 0) + parse_expr(str(coef), chart)
    return DiffForm(terms, chart, degree=1)


def parse_state(state, chart):
    """Parse an initial condition into a list of base-coordinate values

    ``state`` is either a list in fiber order or an object mapping
    coordinate labels to values.
    """
    base = chart.base_coordinates()
    if isinstance(state, dict):
        values = {_lookup(name, chart): val for name, val in state.items()}
        missing = [chart.label(c) for c in base if c not in values]
        if missing:
            raise ProblemFileError("initial condition has no value for "
                                   "{0}".format(', '.join(missing)))
        state = [values[c] for c in base]
    if not isinstance(state, list) or len(state) != len(base):
        raise ProblemFileError("initial condition {0!r} needs {1} "
                               "values".format(state, len(base)))
    try:
        return [float(x) for x in state]
    except (TypeError, ValueError):
        raise ProblemFileError("initial condition {0!r} is not "
                               "numeric".format(state))


def _parse_vtuple(components, chart, key):
    exprs = [parse_expr(str(c), chart) for c in _as_list(components, key)]
    if len(exprs) != chart.n + 1:
        raise ProblemFileError("{0!r} needs {1} components on {2!r}, not "
                               "{3}".format(key, chart.n + 1, chart,
                                            len(exprs)))
    return as_vtuple(exprs, chart)


def read_field(path, chart):
    """Read a vector field file

    The file holds either a v-tuple, ``{"v": ["1", "0"]}``, which is
    prolonged, or explicit components keyed by coordinate label,
    ``{"components": {"q1": "1", "q1_1": "q1"}}``.

    Returns
    -------
    field : `~noetherjet.forms.VectorField`
    vtuple : `~noetherjet.symmetry.VTuple` or `None`
    """
    with open(path, 'r') as fobj:
        data = json.load(fobj)
    if not isinstance(data, dict):
        raise ProblemFileError("field file must hold an object")
    if 'v' in data:
        vtuple = _parse_vtuple(data['v'], chart, 'v')
        return prolong_v(vtuple, chart), vtuple
    if 'components' in data:
        components = data['components']
        if not isinstance(components, dict):
            raise ProblemFileError("'components' must be an object")
        return VectorField({
            _lookup(name, chart): parse_expr(str(value), chart) for
            name, value in components.items()}, chart), None
    raise ProblemFileError("field file needs a 'v' or a 'components' entry")


# -- problem files ------------------------------------------------------------

class ProblemFile(object):
    """A parsed problem document

    Parameters
    ----------
    kind : `str`
        one of ``'lagrangian'``, ``'hamiltonian'`` or ``'one_form'``
    chart : `~noetherjet.jet.Chart`
        the chart every expression is read on
    payload : `sympy.Expr`, `~noetherjet.noether.HamiltonianProblem` or
              `~noetherjet.forms.DiffForm`
        the Lagrangian, Hamiltonian system or 1-form
    """
    __slots__ = ('kind', 'chart', 'payload', 'symmetry', 'first_integrals',
                 'basis', 'initial_conditions', 'window', 'path')

    def __init__(self, kind, chart, payload, symmetry=None,
                 first_integrals=None, basis=None, initial_conditions=None,
                 window=None, path=None):
        if kind not in KINDS:
            raise ProblemFileError("unknown problem kind {0!r}, expected one "
                                   "of {1}".format(kind, ', '.join(KINDS)))
        self.kind = kind
        self.chart = chart
        self.payload = payload
        self.symmetry = symmetry
        self.first_integrals = list(first_integrals or [])
        self.basis = basis
        self.initial_conditions = list(initial_conditions or [])
        self.window = dict(window or {})
        self.path = path

    @classmethod
    def read(cls, path, chart_order=None):
        """Read a problem file

        Parameters
        ----------
        path : `str`
            path of the JSON document
        chart_order : `int`, optional
            jet order overriding the one declared in the file

        Raises
        ------
        OSError
            if ``path`` cannot be read
        json.JSONDecodeError
            if the file is not valid JSON
        noetherjet.errors.InputError
            if the document or one of its expressions is malformed
        """
        with open(path, 'r') as fobj:
            data = json.load(fobj)
        return cls.from_dict(data, chart_order=chart_order, path=path)

    @classmethod
    def from_dict(cls, data, chart_order=None, path=None):
        """Build a problem from a parsed JSON object
        """
        if not isinstance(data, dict):
            raise ProblemFileError("problem file must hold an object")
        kind = _require(data, 'kind')
        if kind not in KINDS:
            raise ProblemFileError("unknown problem kind {0!r}, expected one "
                                   "of {1}".format(kind, ', '.join(KINDS)))
        chart = _parse_chart(_require(data, 'chart'), chart_order=chart_order)
        if kind == 'hamiltonian':
            if not chart.hamiltonian:
                raise ProblemFileError("hamiltonian problems need 'n_dof' in "
                                       "their chart")
            payload = HamiltonianProblem(
                str(_require(data, 'hamiltonian', kind)), chart=chart)
        elif kind == 'lagrangian':
            payload = parse_expr(str(_require(data, 'lagrangian', kind)),
                                 chart)
        else:
            payload = parse_one_form(_require(data, 'one_form', kind), chart)

        symmetry = None
        if 'symmetry' in data:
            symmetry = _parse_vtuple(data['symmetry'], chart, 'symmetry')
        integrals = [parse_expr(str(f), chart) for f in
                     _as_list(data.get('first_integrals', []),
                              'first_integrals')]
        basis = None
        if 'basis' in data:
            basis = [parse_expr(str(b), chart) for b in
                     _as_list(data['basis'], 'basis')]
        inits = [parse_state(s, chart) for s in
                 data.get('initial_conditions', [])]
        window = data.get('window', {})
        if not isinstance(window, dict) or set(window) - {'t0', 't1', 'dt'}:
            raise ProblemFileError("'window' takes the keys t0, t1 and dt")
        return cls(kind, chart, payload, symmetry=symmetry,
                   first_integrals=integrals, basis=basis,
                   initial_conditions=inits,
                   window={key: float(val) for key, val in window.items()},
                   path=path)

    # -- derived objects

    def hamiltonian_problem(self):
        """Return the Hamiltonian system of a ``hamiltonian`` problem
        """
        if self.kind != 'hamiltonian':
            raise ProblemFileError("this operation needs a hamiltonian "
                                   "problem, not {0}".format(self.kind))
        return self.payload

    def alpha(self):
        """Return the 1-form whose variational class defines the action
        """
        if self.kind == 'hamiltonian':
            return self.payload.alpha
        if self.kind == 'lagrangian':
            return DiffForm.dt(self.chart) * self.payload
        return self.payload

    def lagrangian(self):
        if self.kind == 'lagrangian':
            return self.payload
        return lagrangian_of(self.alpha())

    def source(self):
        """Return the source form of the problem
        """
        if self.kind == 'hamiltonian':
            return self.payload.source
        if self.kind == 'lagrangian':
            return el_source(self.payload, self.chart)
        return source_of_alpha(self.payload, self.chart)

    def pc_form(self):
        """Return a representative of Poincare-Cartan type
        """
        if self.kind == 'hamiltonian':
            return self.payload.alpha
        if self.kind == 'one_form' and is_poincare_cartan_type(self.payload):
            return self.payload
        return poincare_cartan_form(self.lagrangian(), self.chart)

    def default_depth(self):
        """Return the depth of the full prolongation, ``k - r``
        """
        return max(0, self.chart.k - self.source().order)
