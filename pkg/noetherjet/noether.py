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

"""The Noether correspondence between symmetries and constants of motion

The direct map contracts an action symmetry into a form of Poincare-Cartan
type. Two inverse maps are provided:

- `noether_inverse_hamiltonian` is the exact closed-form construction for
  first integrals of a time-independent Hamiltonian
- `noether_inverse_ansatz` searches a finite linear ansatz for the
  coefficients expressing :math:`-df/dt` in the prolonged Euler-Lagrange
  ideal, and returns `None` when the ansatz is too small
"""

import warnings

import sympy

from .errors import (
    DegenerateRegionError,
    InvariantViolationError,
    NotASymmetryError,
    NotFirstIntegralError,
    NotSolvableError,
    OrderBudgetExceeded,
    PreconditionError,
)
from .euler_lagrange import (
    el_source,
    on_shell_reduce,
    prolong_system,
)
from .expr import (
    TIME,
    ZERO,
    CoordId,
    as_expr,
    coordinates,
    evaluate,
    is_zero,
    order_of,
    parse_expr,
    partial,
    simplify,
    to_string,
)
from .forms import (
    DiffForm,
    VectorField,
    contact_decompose,
    exterior_d,
    interior,
    lie_derivative,
)
from .jet import (
    Chart,
    check_expr,
    total_derivative,
    truncated_total_derivative,
)
from .symmetry import (
    VTuple,
    is_action_symmetry,
    is_poincare_cartan_type,
    prolong_v,
)

__author__ = 'The noetherjet developers'


def _check_phase_function(f, chart, what='function'):
    """Check that ``f`` depends on the phase-space coordinates only
    """
    f = check_expr(as_expr(f), chart)
    for c in coordinates(f):
        if c.is_time:
            raise PreconditionError(
                "{0} {1} depends on t".format(what, to_string(f, chart)))
        if c.order:
            raise PreconditionError(
                "{0} {1} depends on the derivative coordinate {2}".format(
                    what, to_string(f, chart), chart.label(c)))
    return f


def _zero_form(form):
    if isinstance(form, DiffForm):
        return all(is_zero(c) for c in form.terms.values())
    return bool(is_zero(form))


# -- Hamiltonian problems -----------------------------------------------------

class HamiltonianProblem(object):
    """A time-independent Hamiltonian on the jet space of phase space

    Parameters
    ----------
    hamiltonian : `str` or `sympy.Expr`
        the Hamiltonian :math:`H(q, p)`
    n_dof : `int`, optional
        number of degrees of freedom, default: ``1``
    k : `int`, optional
        jet order of the working chart, default: ``2``
    chart : `~noetherjet.jet.Chart`, optional
        a Hamiltonian chart, overrides ``n_dof`` and ``k``

    Raises
    ------
    noetherjet.errors.PreconditionError
        if ``hamiltonian`` depends on ``t`` or on a derivative coordinate

    Examples
    --------
    >>> from noetherjet.noether import HamiltonianProblem
    >>> hp = HamiltonianProblem('(p1^2 + q1^2)/2')
    >>> print(hp.source)
    sigma_q1 = -q1 - p1_1
    sigma_p1 = q1_1 - p1
    """
    __slots__ = ('chart', 'hamiltonian')

    def __init__(self, hamiltonian, n_dof=1, k=2, chart=None):
        if chart is None:
            chart = Chart(n_dof=n_dof, k=k)
        elif not chart.hamiltonian:
            raise ValueError("{0!r} is not a Hamiltonian chart".format(chart))
        if isinstance(hamiltonian, str):
            hamiltonian = parse_expr(hamiltonian, chart)
        self.chart = chart
        self.hamiltonian = _check_phase_function(hamiltonian, chart,
                                                 what='Hamiltonian')

    @property
    def n_dof(self):
        return self.chart.n_dof

    def positions(self):
        return [self.chart.q(i) for i in range(1, self.n_dof + 1)]

    def momenta(self):
        return [self.chart.p(j) for j in range(1, self.n_dof + 1)]

    # -- forms

    @property
    def theta(self):
        """The Liouville form :math:`\\theta = p_i\\,dq^i`
        """
        return DiffForm({(q,): p.symbol for q, p in
                         zip(self.positions(), self.momenta())}, self.chart)

    @property
    def omega(self):
        """The symplectic form :math:`\\Omega = d\\theta = dp_i\\wedge dq^i`
        """
        return exterior_d(self.theta)

    @property
    def alpha(self):
        """The Poincare-Cartan form :math:`\\alpha^H = \\theta - H\\,dt`
        """
        return self.theta - DiffForm.dt(self.chart) * self.hamiltonian

    @property
    def lagrangian(self):
        return simplify(sum(
            (p.symbol * q.raised().symbol for q, p in
             zip(self.positions(), self.momenta())), ZERO) - self.hamiltonian)

    @property
    def source(self):
        """The source form of :math:`[\\alpha^H]`

        Position rows are :math:`-\\partial H/\\partial q^i - p_{i,(1)}`,
        momentum rows :math:`q^i_{(1)} - \\partial H/\\partial p_i`.
        """
        return el_source(self.lagrangian, self.chart)

    def system(self, depth=None):
        """Return the prolonged Hamilton equations

        The default depth is the full prolongation ``k - 1``.
        """
        source = self.source
        if depth is None:
            depth = self.chart.k - source.order
        return prolong_system(source, depth)

    # -- flow

    def equations_of_motion(self):
        """Right-hand sides of Hamilton's equations, in fiber order

        Returns
        -------
        rhs : `list` of `sympy.Expr`
            :math:`\\partial H/\\partial p_i` for each position fiber,
            then :math:`-\\partial H/\\partial q^i` for each momentum fiber
        """
        H = self.hamiltonian
        return ([partial(H, p) for p in self.momenta()] +
                [simplify(-partial(H, q)) for q in self.positions()])

    def flow_derivatives(self, order=None):
        """Express derivative coordinates along the flow in phase space

        Returns
        -------
        derivatives : `dict`
            map from :math:`y^i_{(a)}`, ``1 <= a <= order``, to its value
            on solutions, as a function of :math:`(q, p)`
        """
        order = self.chart.k if order is None else order
        base = self.chart.base_coordinates()
        rhs = self.equations_of_motion()
        out = {}
        current = dict(zip(base, rhs))
        for a in range(1, order + 1):
            out.update({c.raised(a): current[c] for c in base})
            current = {c: simplify(sum(
                (partial(current[c], b) * f for b, f in zip(base, rhs)),
                ZERO)) for c in base}
        return out

    def jet_point(self, state, t=0., order=None):
        """Lift a phase-space state to a point of the jet space

        Parameters
        ----------
        state : `list` of `float`
            values of :math:`(q^1, \\dots, p_n)` in fiber order
        t : `float`, optional
            the time coordinate
        order : `int`, optional
            highest derivative order to include, defaults to ``k``

        Returns
        -------
        point : `dict`
            map from `~noetherjet.expr.CoordId` to `float`
        """
        base = self.chart.base_coordinates()
        if len(state) != len(base):
            raise ValueError("a state on {0!r} has {1} values, not "
                             "{2}".format(self.chart, len(base), len(state)))
        point = {TIME: float(t)}
        point.update(zip(base, map(float, state)))
        for c, e in self.flow_derivatives(order).items():
            point[c] = evaluate(e, point)
        return point

    def __repr__(self):
        return '<HamiltonianProblem H = {0} on {1!r}>'.format(
            to_string(self.hamiltonian, self.chart), self.chart)


# -- Noether pairs ------------------------------------------------------------

class NoetherPair(object):
    """A symmetry together with its constant of motion

    Parameters
    ----------
    symmetry : `~noetherjet.forms.VectorField`
        the infinitesimal symmetry :math:`X`
    constant : `sympy.Expr`
        the constant of motion :math:`f`
    corrections : `list` of `sympy.Expr`
        functions vanishing on solutions, with
        :math:`\\iota_X \\alpha_o = f + \\sum g`
    form : `~noetherjet.forms.DiffForm`
        the form :math:`\\alpha_o` of Poincare-Cartan type
    vtuple : `~noetherjet.symmetry.VTuple`, optional
        the base data of ``symmetry``
    singular : `sympy.Expr`, optional
        an expression whose zero set is excluded from the domain of
        ``symmetry``
    """
    __slots__ = ('symmetry', 'constant', 'corrections', 'form', 'vtuple',
                 'singular')

    def __init__(self, symmetry, constant, corrections, form, vtuple=None,
                 singular=None):
        self.symmetry = symmetry
        self.constant = simplify(constant)
        self.corrections = [simplify(g) for g in corrections]
        self.form = form
        self.vtuple = vtuple
        self.singular = singular

    @property
    def chart(self):
        return self.form.chart

    def total(self):
        """Return :math:`f + \\sum g`
        """
        return simplify(self.constant + sum(self.corrections, ZERO))

    def residual(self):
        """Return :math:`\\iota_X \\alpha_o - (f + \\sum g)`
        """
        return simplify(interior(self.symmetry, self.form) - self.total())

    def conservation_residual(self, system):
        """Reduce :math:`d/dt(f + \\sum g)` modulo a prolonged system
        """
        return on_shell_reduce(total_derivative(self.total()), system)

    def to_dict(self):
        chart = self.chart
        out = {
            'constant': to_string(self.constant, chart),
            'corrections': [to_string(g, chart) for g in self.corrections],
            'symmetry': {chart.label(c): to_string(v, chart) for
                         c, v in self.symmetry.components.items()},
        }
        if self.vtuple is not None:
            out['vtuple'] = [to_string(c, chart) for
                             c in self.vtuple.components()]
        if self.singular is not None:
            out['singular'] = to_string(self.singular, chart)
        return out

    def __str__(self):
        chart = self.chart
        lines = ['f = {0}'.format(to_string(self.constant, chart))]
        for ell, g in enumerate(self.corrections, start=1):
            lines.append('g{0} = {1}'.format(ell, to_string(g, chart)))
        lines.append('X = {0}'.format(self.symmetry))
        return '\n'.join(lines)


# -- direct map ---------------------------------------------------------------

def noether_direct(X, a_o, s):
    """Return the constant of motion :math:`\\iota_X \\alpha_o` of a symmetry

    Parameters
    ----------
    X : `~noetherjet.forms.VectorField`
        an infinitesimal symmetry of the action of ``a_o``
    a_o : `~noetherjet.forms.DiffForm`
        a 1-form of Poincare-Cartan type
    s : `~noetherjet.euler_lagrange.SourceForm`
        the source form of the class of ``a_o``

    Raises
    ------
    noetherjet.errors.NotASymmetryError
        if ``X`` is not an action symmetry of ``a_o``
    """
    if s.chart.n != a_o.chart.n:
        raise ValueError("source form and 1-form live on different fibers")
    report = is_action_symmetry(X, a_o)
    if not report:
        raise NotASymmetryError(
            "vector field is not a symmetry of the action:\n{0}".format(
                report))
    return interior(X, a_o)


# -- Hamiltonian structure ----------------------------------------------------

def hamiltonian_vector_field(f, chart):
    """Return the Hamiltonian vector field of a phase-space function

    .. math::

       Y^{(f)} = \\frac{\\partial f}{\\partial p_i}\\frac{\\partial}{\\partial
       q^i} - \\frac{\\partial f}{\\partial q^j}\\frac{\\partial}{\\partial
       p_j}

    With :math:`\\Omega = dp_i\\wedge dq^i` this gives
    :math:`\\iota_{Y^{(f)}}\\Omega = -df`.
    """
    f = _check_phase_function(f, chart)
    components = {}
    for i in range(1, chart.n_dof + 1):
        components[chart.q(i)] = partial(f, chart.p(i))
        components[chart.p(i)] = -partial(f, chart.q(i))
    return VectorField(components, chart)


def poisson_bracket(f, g, chart):
    """Return :math:`\\{f, g\\} = \\sum_i (f_{q^i} g_{p_i} - f_{p_i} g_{q^i})`

    Examples
    --------
    >>> from noetherjet.expr import parse_expr
    >>> from noetherjet.jet import Chart
    >>> from noetherjet.noether import poisson_bracket
    >>> chart = Chart(n_dof=1, k=2)
    >>> poisson_bracket(parse_expr('q1^2', chart),
    ...                 parse_expr('p1', chart), chart)
    2*y1_0
    """
    f = _check_phase_function(f, chart)
    g = _check_phase_function(g, chart)
    out = ZERO
    for i in range(1, chart.n_dof + 1):
        q, p = chart.q(i), chart.p(i)
        out += partial(f, q) * partial(g, p) - partial(f, p) * partial(g, q)
    return simplify(out)


def hamiltonian_bracket(f, g, chart):
    """Return the Lie bracket :math:`[Y^{(f)}, Y^{(g)}]`

    This equals :math:`-Y^{(\\{f, g\\})}`.
    """
    return -hamiltonian_vector_field(poisson_bracket(f, g, chart), chart)


def fiber_projection(X, hp):
    """Project ``X`` onto phase space along the solutions of ``hp``

    The characteristic :math:`X^i - y^i_{(1)} X^0` of every fiber
    coordinate is restricted to Hamilton's equations, so derivative
    coordinates are replaced by their values along the flow. For the
    symmetry built from a first integral ``f`` this is :math:`Y^{(f)}`.

    Parameters
    ----------
    X : `~noetherjet.forms.VectorField`
        a field on ``hp.chart``
    hp : `HamiltonianProblem`
        the Hamiltonian system

    Returns
    -------
    Y : `~noetherjet.forms.VectorField`
        with :math:`\\partial/\\partial q` and :math:`\\partial/\\partial p`
        components only
    """
    chart = hp.chart
    flow = {c.symbol: value for c, value in
            hp.flow_derivatives(chart.k).items()}
    components = {}
    for c in chart.base_coordinates():
        characteristic = X[c] - c.raised().symbol * X[TIME]
        components[c] = simplify(as_expr(characteristic).xreplace(flow))
    return VectorField(components, chart)


def is_elementary_first_integral(f, hp):
    """Test whether :math:`\\{f, H\\}` vanishes
    """
    return bool(is_zero(poisson_bracket(f, hp.hamiltonian, hp.chart)))


def is_H_symplectic(Y, hp):
    """Test whether ``Y`` preserves :math:`\\Omega` and annihilates
    :math:`dH`
    """
    if not _zero_form(lie_derivative(Y, hp.omega)):
        return False
    return bool(is_zero(interior(Y, exterior_d(hp.hamiltonian, hp.chart))))


# -- inverse maps -------------------------------------------------------------

def noether_inverse_hamiltonian(f, hp):
    """Build the symmetry of an elementary first integral

    The time component is

    .. math::

       v^0 = \\frac{f - p_i\\,\\partial f/\\partial p_i}
                   {p_i\\,\\partial H/\\partial p_i - H}

    and the fiber components are those of :math:`Y^{(f)} + v^0 Y^{(H)}`.
    This is the familiar construction with :math:`q_{(1)}` replaced by its
    value on Hamilton's equations, so every component is a function of
    :math:`(q, p)` and the prolongation preserves the holonomic
    distribution on any chart. The energy :math:`-H` maps to the time
    translation.

    Parameters
    ----------
    f : `sympy.Expr`
        a function of :math:`(q, p)` with :math:`\\{f, H\\} = 0`
    hp : `HamiltonianProblem`
        the Hamiltonian system

    Returns
    -------
    pair : `NoetherPair`
        with :math:`\\iota_X \\alpha^H = f`, no corrections, and
        ``singular`` set to the denominator when it survives in
        :math:`v^0`

    Raises
    ------
    noetherjet.errors.NotFirstIntegralError
        if :math:`\\{f, H\\} \\neq 0`
    noetherjet.errors.DegenerateRegionError
        if the denominator vanishes identically
    """
    chart = hp.chart
    f = _check_phase_function(f, chart)
    if not is_elementary_first_integral(f, hp):
        raise NotFirstIntegralError(
            "{0} is not a first integral: {{f, H}} = {1}".format(
                to_string(f, chart),
                to_string(poisson_bracket(f, hp.hamiltonian, chart), chart)))
    momenta = hp.momenta()
    denominator = simplify(sum(
        (p.symbol * partial(hp.hamiltonian, p) for p in momenta),
        ZERO) - hp.hamiltonian)
    if denominator == 0:
        raise DegenerateRegionError(
            "p dH/dp - H vanishes identically; no symmetry can be built")
    numerator = simplify(f - sum(
        (p.symbol * partial(f, p) for p in momenta), ZERO))
    v0 = simplify(numerator / denominator)
    reduced = hamiltonian_vector_field(f, chart)
    flow = hamiltonian_vector_field(hp.hamiltonian, chart)
    v = [simplify(reduced[c] + flow[c] * v0) for
         c in chart.base_coordinates()]
    vtuple = VTuple(v0, v, chart)
    return NoetherPair(prolong_v(vtuple, chart), f, [], hp.alpha,
                       vtuple=vtuple,
                       singular=denominator if _has_pole(v0) else None)


def _has_pole(e):
    return bool(coordinates(sympy.fraction(sympy.together(e))[1]))


def _generators(numer, unknowns):
    unknowns = set(unknowns)
    gens = sorted((s for s in numer.free_symbols if s not in unknowns),
                  key=sympy.default_sort_key)
    atoms = [a for a in numer.atoms(sympy.Function, sympy.Pow) if
             isinstance(a, sympy.Function) or not a.exp.is_integer]
    return gens + sorted(atoms, key=sympy.default_sort_key)


def _linear_identity(expr, unknowns):
    """Solve ``expr == 0`` identically for unknowns entering linearly

    Returns `None` if the system has no solution; free parameters are set
    to zero.
    """
    numer, _ = sympy.fraction(sympy.together(expr))
    numer = sympy.expand(numer)
    if numer == 0:
        return {u: ZERO for u in unknowns}
    gens = _generators(numer, unknowns)
    if gens:
        equations = sympy.Poly(numer, *gens).coeffs()
    else:
        equations = [numer]
    A, b = sympy.linear_eq_to_matrix(equations, unknowns)
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None
    solution = solution.xreplace({t: 0 for t in params})
    return dict(zip(unknowns, solution))


def noether_inverse_ansatz(f, s, a_o, basis, depth=None):
    """Search a symmetry for a constant of motion within a linear ansatz

    The identity :math:`-df/dt = \\sum c_{i,l}\\,(d/dt)^l\\sigma_i` is
    solved for coefficients :math:`c_{i,l}` in the span of ``basis``. A
    solution is integrated by parts, top row first, into corrections
    :math:`g` and reduced coefficients :math:`\\tilde v^i`, and the time
    component is fixed by :math:`\\iota_X\\alpha_o = f + \\sum g`.

    When these base data prolong to a field that leaves the holonomic
    distribution, they are restricted to the solved form of the prolonged
    system and the change in the contraction, which vanishes on shell, is
    appended to the corrections.

    Parameters
    ----------
    f : `sympy.Expr`
        a constant of motion of order at most ``k - 1``
    s : `~noetherjet.euler_lagrange.SourceForm`
        the source form of the class of ``a_o``
    a_o : `~noetherjet.forms.DiffForm`
        a 1-form of Poincare-Cartan type of order at most ``k - 1``
    basis : `list` of `sympy.Expr`
        functions spanning each coefficient :math:`c_{i,l}`
    depth : `int`, optional
        highest derivative of the source rows to use, defaults to
        ``k - r`` where ``r`` is the order of ``s``

    Returns
    -------
    pair : `NoetherPair` or `None`
        `None` when the ansatz has no solution, or when neither the
        solution nor its on-shell restriction is an admissible v-tuple

    Raises
    ------
    noetherjet.errors.PreconditionError
        if ``f`` or ``a_o`` has order ``k`` or more, or ``a_o`` is not of
        Poincare-Cartan type
    noetherjet.errors.DegenerateRegionError
        if :math:`\\alpha_o(d/dt)` vanishes identically
    """
    chart = a_o.chart
    k = chart.k
    f = check_expr(as_expr(f), chart)
    if order_of(f) > k - 1:
        raise PreconditionError(
            "constant of motion {0} has order {1}, at most {2} is "
            "allowed".format(to_string(f, chart), order_of(f), k - 1))
    if a_o.order > k - 1:
        raise PreconditionError(
            "1-form has order {0}, at most {1} is allowed".format(
                a_o.order, k - 1))
    if not is_poincare_cartan_type(a_o):
        raise PreconditionError("1-form is not of Poincare-Cartan type")
    lagrangian, contact, top = contact_decompose(a_o)
    if is_zero(lagrangian):
        raise DegenerateRegionError("alpha_o(d/dt) vanishes identically")
    if depth is None:
        depth = k - s.order
    if depth < 0:
        raise OrderBudgetExceeded(
            "source form of order {0} does not fit a chart of order "
            "{1}".format(s.order, k))
    system = prolong_system(s, depth)
    rows = system.rows
    basis = [as_expr(b) for b in basis]

    # coefficient ansatz
    unknowns = []
    coefficients = []
    for ell in range(depth + 1):
        level = []
        for i in range(chart.n):
            weights = [sympy.Dummy('c_{0}_{1}_{2}'.format(i + 1, ell, m))
                       for m in range(len(basis))]
            unknowns.extend(weights)
            level.append(sum((w * b for w, b in zip(weights, basis)), ZERO))
        coefficients.append(level)
    identity = total_derivative(f) + sum(
        (c * row for level, row_set in zip(coefficients, rows) for
         c, row in zip(level, row_set)), ZERO)
    solution = _linear_identity(identity, unknowns)
    if solution is None:
        warnings.warn("no coefficients in the span of the basis express "
                      "-df/dt in the prolonged system")
        return None
    vhat = [[simplify(c.xreplace(solution)) for c in level] for
            level in coefficients]

    # integration by parts, top row first
    corrections = []
    for ell in range(depth, 0, -1):
        corrections.append(simplify(sum(
            (c * row for c, row in zip(vhat[ell], rows[ell - 1])), ZERO)))
        vhat[ell - 1] = [simplify(low - total_derivative(high)) for
                         low, high in zip(vhat[ell - 1], vhat[ell])]
    reduced = vhat[0]

    # time component from the contraction
    try:
        contraction = ZERO
        for (i, a), coef in contact.items():
            contraction += coef * truncated_total_derivative(
                reduced[i - 1], chart, times=a)
        for j, coef in top.items():
            contraction += coef * truncated_total_derivative(
                reduced[j - 1], chart, times=k)
    except OrderBudgetExceeded as exc:
        warnings.warn("ansatz solution does not define a symmetry on "
                      "{0!r}: {1}".format(chart, exc))
        return None
    total = simplify(f + sum(corrections, ZERO))
    v0 = simplify((total - contraction) / lagrangian)
    v = [simplify(r + CoordId(i, 1).symbol * v0) for
         i, r in enumerate(reduced, start=1)]
    singular = lagrangian
    try:
        vtuple = VTuple(v0, v, chart)
    except InvariantViolationError as exc:
        # retry with the base data restricted to the equations of motion
        try:
            v0 = on_shell_reduce(v0, system)
            v = [on_shell_reduce(vi, system) for vi in v]
            vtuple = VTuple(v0, v, chart)
            singular = on_shell_reduce(lagrangian, system)
        except (InvariantViolationError, NotSolvableError) as retry:
            warnings.warn("ansatz solution does not define a symmetry on "
                          "{0!r}: {1}; {2}".format(chart, exc, retry))
            return None
        X = prolong_v(vtuple, chart)
        extra = simplify(interior(X, a_o) - total)
        if extra != 0:
            if not is_zero(on_shell_reduce(extra, system)):
                warnings.warn("on-shell base data change the constant of "
                              "motion by {0}".format(to_string(extra, chart)))
                return None
            corrections.append(extra)
        if not is_action_symmetry(X, a_o):
            warnings.warn("on-shell base data do not define an action "
                          "symmetry on {0!r}".format(chart))
            return None
    return NoetherPair(prolong_v(vtuple, chart), f, corrections, a_o,
                       vtuple=vtuple,
                       singular=singular if _has_pole(vtuple.v0) else None)
