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

"""Compute Euler-Lagrange equations, symmetries and constants of motion on
finite-order jet spaces
"""

import argparse
import os
import sys

try:
    from gwdetchar.utils import cli
except ImportError:  # older gwdetchar layout
    from gwdetchar import cli

from . import __version__
from .config import JetConfigParser
from .errors import (
    EXIT_FAILURE,
    EXIT_SUCCESS,
    INPUT_ERRORS,
    PRECONDITION_ERRORS,
    NotSolvableError,
    ProblemFileError,
    exit_code,
)
from .euler_lagrange import (
    prolong_system,
    regularity_probe,
)
from .expr import (
    configure_sampling,
    parse_expr,
    to_string,
)
from .noether import (
    NoetherPair,
    noether_direct,
    noether_inverse_ansatz,
    noether_inverse_hamiltonian,
)
from .problem import (
    ProblemFile,
    read_field,
)
from .symmetry import (
    is_action_symmetry,
    is_D_symmetry,
    prolong_v,
)
from .utils import (
    render_json,
    write_lines,
)
from .verify import verify_batch

# set up logger
PROG = ('python -m noetherjet' if sys.argv[0].endswith('.py')
        else os.path.basename(sys.argv[0]))
LOGGER = cli.logger(name=PROG.split('python -m ').pop())

__author__ = 'The noetherjet developers'


# -- utilities ----------------------------------------------------------------

def _abs_path(p):
    return os.path.abspath(os.path.expanduser(p))


def _emit(args, lines, data):
    """Print human-readable ``lines``, or ``data`` as JSON with ``--json``
    """
    if args.json:
        write_lines(sys.stdout, [render_json(data)])
    else:
        write_lines(sys.stdout, lines)


def _chart_dict(chart):
    out = {'n': chart.n, 'k': chart.k}
    if chart.hamiltonian:
        out['n_dof'] = chart.n_dof
    return out


def _rows(labels, exprs, chart):
    return [{'label': label, 'expr': to_string(e, chart)} for
            label, e in zip(labels, exprs)]


def _symmetry_field(args, problem):
    if args.field:
        LOGGER.debug("Reading vector field from %s", args.field)
        return read_field(args.field, problem.chart)
    if problem.symmetry is not None:
        return prolong_v(problem.symmetry, problem.chart), problem.symmetry
    raise ProblemFileError("no symmetry given, use --field or a 'symmetry' "
                           "entry in the problem file")


def _pair_checks(pair, problem):
    """Return the verification residuals of a Noether pair
    """
    chart = problem.chart
    checks = {'contraction': to_string(pair.residual(), chart)}
    try:
        system = prolong_system(problem.source(), problem.default_depth())
        checks['on_shell'] = to_string(pair.conservation_residual(system),
                                       chart)
    except NotSolvableError as exc:
        LOGGER.warning("Cannot reduce d/dt(f + g) on shell: %s", exc)
    lines = ['iota_X alpha - (f + g) = {0}'.format(checks['contraction'])]
    if 'on_shell' in checks:
        lines.append('d/dt(f + g) on shell = {0}'.format(checks['on_shell']))
    return lines, checks


# -- subcommands --------------------------------------------------------------

def cmd_el(args, problem, config):
    """Print the source form of a problem
    """
    source = problem.source()
    LOGGER.debug("Computed source form of order %d", source.order)
    _emit(args, str(source).splitlines(), {
        'chart': _chart_dict(problem.chart),
        'source': _rows(source.labels(), source, problem.chart),
    })
    return EXIT_SUCCESS


def cmd_prolong(args, problem, config):
    """Print the prolonged Euler-Lagrange system
    """
    source = problem.source()
    depth = problem.default_depth() if args.depth is None else args.depth
    LOGGER.debug("Prolonging source form to depth %d", depth)
    system = prolong_system(source, depth)
    lines = str(system).splitlines()
    data = {
        'chart': _chart_dict(system.chart),
        'depth': depth,
        'rows': _rows(system.labels(), system.flat(), system.chart),
    }
    status = EXIT_SUCCESS
    if args.probe:
        hp = problem.hamiltonian_problem()
        if not problem.initial_conditions:
            raise ProblemFileError("--probe needs 'initial_conditions' in "
                                   "the problem file")
        samples = [hp.jet_point(state, order=system.order) for
                   state in problem.initial_conditions]
        report = regularity_probe(system, samples,
                                  **config.regularity_params())
        lines.append('regularity: ranks {0} of {1} ({2})'.format(
            ', '.join(map(str, report.ranks)), report.expected,
            'regular' if report.regular else 'not regular'))
        data['regularity'] = {
            'ranks': report.ranks,
            'expected': report.expected,
            'regular': report.regular,
        }
        if not report.regular:
            status = EXIT_FAILURE
    _emit(args, lines, data)
    return status


def cmd_symcheck(args, problem, config):
    """Check a vector field for D-symmetry and action symmetry
    """
    field, _ = _symmetry_field(args, problem)
    reports = [is_D_symmetry(field), is_action_symmetry(field,
                                                         problem.alpha())]
    for report in reports:
        if report.passed and report.probabilistic:
            LOGGER.info("%s verdict relies on random sampling", report.name)
    _emit(args, [str(r) for r in reports], {
        'checks': [r.to_dict() for r in reports],
        'pass': all(reports),
    })
    return EXIT_SUCCESS if all(reports) else EXIT_FAILURE


def cmd_noether(args, problem, config):
    """Apply the direct or inverse Noether map
    """
    chart = problem.chart
    if args.inverse:
        if args.first_integral:
            f = parse_expr(args.first_integral, chart)
        elif problem.first_integrals:
            f = problem.first_integrals[0]
        else:
            raise ProblemFileError("the inverse map needs --first-integral or "
                                   "a 'first_integrals' entry")
        if problem.basis is not None:
            LOGGER.debug("Solving ansatz with %d basis functions",
                         len(problem.basis))
            pair = noether_inverse_ansatz(f, problem.source(),
                                          problem.pc_form(), problem.basis)
            if pair is None:
                LOGGER.error("No symmetry found in the span of the basis")
                return EXIT_FAILURE
        elif problem.kind == 'hamiltonian':
            pair = noether_inverse_hamiltonian(f, problem.hamiltonian_problem())
        else:
            raise ProblemFileError("the inverse map needs a hamiltonian "
                                   "problem or a 'basis' entry")
        if pair.singular is not None:
            LOGGER.warning("Symmetry is singular where %s = 0",
                           to_string(pair.singular, chart))
    else:
        field, vtuple = _symmetry_field(args, problem)
        form = problem.pc_form()
        f = noether_direct(field, form, problem.source())
        pair = NoetherPair(field, f, [], form, vtuple=vtuple)
    lines, checks = _pair_checks(pair, problem)
    data = pair.to_dict()
    data['checks'] = checks
    _emit(args, str(pair).splitlines() + lines, data)
    return EXIT_SUCCESS


def cmd_verify(args, problem, config):
    """Integrate the flow and check constants of motion along it
    """
    hp = problem.hamiltonian_problem()
    if not problem.initial_conditions:
        raise ProblemFileError("problem file has no 'initial_conditions'")
    window = {key: config.getfloat('integration', key) for
              key in ('t0', 't1', 'dt')}
    window.update(problem.window)
    for key in ('t0', 't1', 'dt'):
        if getattr(args, key) is not None:
            window[key] = getattr(args, key)
    tol = args.tol
    if tol is None:
        tol = config.getfloat('integration', 'tolerance')
    LOGGER.debug("Integrating %d initial conditions over [%s, %s] with "
                 "step %s", len(problem.initial_conditions), window['t0'],
                 window['t1'], window['dt'])
    results = verify_batch(hp, problem.initial_conditions,
                           problem.first_integrals, nproc=args.nproc,
                           tol=tol, **window)
    chart = problem.chart
    lines = []
    for i, result in enumerate(results):
        lines.append('initial condition {0}: {1}'.format(
            i, ', '.join('{0} = {1!r}'.format(chart.label(c), x) for
                         c, x in zip(chart.base_coordinates(),
                                     result.initial))))
        for report in result.conservation:
            lines.append('  {0}: max drift {1:.3e} ({2})'.format(
                to_string(report.integral, chart), report.max_drift,
                'pass' if report.passed else 'fail'))
        for label, value in zip(result.residuals.labels,
                                result.residuals.maxima):
            lines.append('  {0}: max residual {1:.3e}'.format(label, value))
        lines.append('  {0}'.format('pass' if result.passed else 'fail'))
    if args.output_file:
        for i, result in enumerate(results):
            result.trajectory.write(args.output_file,
                                    group='trajectory{0}'.format(i))
        LOGGER.info("Trajectories written to %s", args.output_file)
    passed = all(result.passed for result in results)
    _emit(args, lines, {
        'window': window,
        'tolerance': tol,
        'results': [result.to_dict(chart) for result in results],
        'pass': passed,
    })
    return EXIT_SUCCESS if passed else EXIT_FAILURE


# -- parse command line -------------------------------------------------------

def _common_options():
    """Options shared by every subcommand
    """
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        'problem',
        type=_abs_path,
        help='path to a JSON problem file',
    )
    parent.add_argument(
        '--json',
        action='store_true',
        default=False,
        help='print machine-readable JSON instead of text',
    )
    parent.add_argument(
        '--chart-order',
        type=int,
        metavar='K',
        help='override the jet order declared in the problem file',
    )
    parent.add_argument(
        '--seed',
        type=int,
        help=('seed for probabilistic equivalence sampling, '
              'overrides the configuration file'),
    )
    parent.add_argument(
        '-f',
        '--config-file',
        action='append',
        default=[],
        type=_abs_path,
        help=('path to noetherjet configuration file, can be given '
              'multiple times (files read in order)'),
    )
    parent.add_argument(
        '-v',
        '--verbose',
        action='store_const',
        dest='loglevel',
        const='DEBUG',
        default='INFO',
        help='log verbose output',
    )
    return parent


def _add_field_option(parser):
    parser.add_argument(
        '--field',
        type=_abs_path,
        help=('path to a JSON vector field file, default: the symmetry '
              'declared in the problem file'),
    )


def create_parser():
    """Create a command-line parser for this entry point
    """
    parser = cli.create_parser(
        prog=PROG,
        description=__doc__,
        version=__version__,
    )
    common = _common_options()
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    # el
    pel = subparsers.add_parser(
        'el',
        parents=[common],
        help='print the Euler-Lagrange source form',
    )
    pel.set_defaults(func=cmd_el)

    # prolong
    ppro = subparsers.add_parser(
        'prolong',
        parents=[common],
        help='print the prolonged Euler-Lagrange system',
    )
    ppro.add_argument(
        '--depth',
        type=int,
        help='number of total derivatives, default: k - r (full prolongation)',
    )
    ppro.add_argument(
        '--probe',
        action='store_true',
        default=False,
        help=('probe the rank of the system at the declared initial '
              'conditions (hamiltonian problems only)'),
    )
    ppro.set_defaults(func=cmd_prolong)

    # symcheck
    psym = subparsers.add_parser(
        'symcheck',
        parents=[common],
        help='check a vector field for D-symmetry and action symmetry',
    )
    _add_field_option(psym)
    psym.set_defaults(func=cmd_symcheck)

    # noether
    pnoe = subparsers.add_parser(
        'noether',
        parents=[common],
        help='map symmetries to constants of motion and back',
    )
    mode = pnoe.add_mutually_exclusive_group()
    mode.add_argument(
        '--direct',
        action='store_true',
        default=True,
        help='contract a symmetry into its constant of motion (default)',
    )
    mode.add_argument(
        '--inverse',
        action='store_true',
        default=False,
        help='build the symmetry of a constant of motion',
    )
    _add_field_option(pnoe)
    pnoe.add_argument(
        '--first-integral',
        metavar='EXPR',
        help=('constant of motion for --inverse, default: the first entry '
              'of first_integrals in the problem file'),
    )
    pnoe.set_defaults(func=cmd_noether)

    # verify
    pver = subparsers.add_parser(
        'verify',
        parents=[common],
        help='integrate the flow and check constants of motion',
    )
    cli.add_nproc_option(pver, default=1)
    pver.add_argument(
        '--t0',
        type=float,
        help='start of the integration window',
    )
    pver.add_argument(
        '--t1',
        type=float,
        help='end of the integration window',
    )
    pver.add_argument(
        '--dt',
        type=float,
        help='integration step',
    )
    pver.add_argument(
        '--tol',
        type=float,
        help='largest drift and on-shell residual accepted',
    )
    pver.add_argument(
        '-o',
        '--output-file',
        type=_abs_path,
        help='path of an HDF5 file to write the trajectories to',
    )
    pver.set_defaults(func=cmd_verify)

    # return the parser
    return parser


# -- main code block ----------------------------------------------------------

def main(args=None):
    """Run the noetherjet command-line tool
    """
    parser = create_parser()
    args = parser.parse_args(args=args)
    LOGGER.setLevel(args.loglevel)
    LOGGER.debug('Running in verbose mode')

    try:
        # read configuration
        config = JetConfigParser()
        if args.config_file:
            config.read(args.config_file)
        sampling = config.sampling_params()
        if args.seed is not None:
            sampling['seed'] = args.seed
        configure_sampling(**sampling)

        # read problem and run
        LOGGER.debug("Reading problem file %s", args.problem)
        problem = ProblemFile.read(args.problem, chart_order=args.chart_order)
        return args.func(args, problem, config)
    except INPUT_ERRORS + PRECONDITION_ERRORS as exc:
        LOGGER.critical(str(exc))
        return exit_code(exc)


# -- run from command-line ----------------------------------------------------

if __name__ == "__main__":
    sys.exit(main())
