# Copyright 2024 specdefl contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Command line interface of the experiment harness
"""

#
# IMPORTS
#
from specdefl.common.config import load_config_file, merge_config
from specdefl.common.exceptions import SpecdeflError
from specdefl.common.logger import configure_cli_logging, get_logger
from specdefl.deflation.projectors import build_basis, deflated_solve
from specdefl.deflation.spectral import SubspaceJob, compute_Z, \
    random_probe
from specdefl.experiments.config import PARAMETER_FIELDS, build_config
from specdefl.experiments.report import load_report, report_emit, \
    summary_table
from specdefl.experiments.runner import load_problem, run_computation
from specdefl.krylov import Solver
from specdefl.linalg.cge import cge
from specdefl.linalg.eigtools import dense_eigenvalues, spectrum_report, \
    write_spectrum_csv
from specdefl.linalg.mmio import read_matrix_market, write_matrix_market

import argparse
import sys

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
EXIT_OK = 0
EXIT_ERROR = 2

#
# CODE
#
def _add_problem_flags(parser):
    """
    Flags selecting the linear system
    """
    group = parser.add_argument_group('problem')
    group.add_argument('--problem',
                       choices=('convdiff', 'mmfile', 'mmfile-ilu0'))
    group.add_argument('--n', type=int, help='interior points per axis')
    group.add_argument('--re', type=float, help='Reynolds number')
    group.add_argument('--matrix', help='Matrix Market file of A')
# _add_problem_flags()

def _add_contour_flags(parser):
    """
    Flags of the circle and the quadrature
    """
    group = parser.add_argument_group('contour')
    group.add_argument('--center', type=float)
    group.add_argument('--center-imag', type=float)
    group.add_argument('--radius', type=float)
    group.add_argument('--quad-order', type=int)
# _add_contour_flags()

def _add_subspace_flags(parser):
    """
    Flags of the shifted solves
    """
    group = parser.add_argument_group('deflation subspace')
    group.add_argument('--m', type=int, help='columns of the probe block')
    group.add_argument('--inner-solver', choices=('gmres', 'mbicg'))
    group.add_argument('--inner-tol', type=float)
    group.add_argument('--inner-maxit', type=int)
    group.add_argument('--inner-init', choices=('zero', 'random'))
    group.add_argument('--seed', type=int)
    group.add_argument('--workers', type=int)
# _add_subspace_flags()

def _add_solver_flags(parser):
    """
    Flags of the outer solve
    """
    group = parser.add_argument_group('solver')
    group.add_argument('--solver', choices=('gmres', 'mbicg'))
    group.add_argument('--outer-tol', type=float)
    group.add_argument('--outer-maxit', type=int)
    group.add_argument('--restart', type=int,
                       help='GMRES cycle length, unrestarted when omitted')
# _add_solver_flags()

def _add_cge_flags(parser):
    """
    Flags of the column selection
    """
    group = parser.add_argument_group('cge')
    group.add_argument('--cge-alpha', type=float)
    group.add_argument('--cge-tol', type=float)
# _add_cge_flags()

def build_parser():
    """
    Create the argument parser with all subcommands.

    Returns:
        argparse.ArgumentParser: the parser
    """
    parser = argparse.ArgumentParser(
        prog='specdefl',
        description='Deflated Krylov solvers with contour-integral '
                    'deflation subspaces')
    parser.add_argument('--config', help='flat YAML key-value file, flags '
                        'override its values')
    parser.add_argument('--log-level', default='WARNING',
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))
    subparsers = parser.add_subparsers(dest='command', required=True)

    cmd = subparsers.add_parser('gen-problem',
                                help='assemble and write a test matrix')
    _add_problem_flags(cmd)
    cmd.add_argument('--output', required=True, help='Matrix Market file')
    cmd.add_argument('--rhs-output', help='write b = A 1 to this file')
    cmd.set_defaults(func=cmd_gen_problem)

    cmd = subparsers.add_parser('eig', help='dense spectrum diagnostics')
    _add_problem_flags(cmd)
    _add_contour_flags(cmd)
    cmd.add_argument('--eig-max-size', type=int)
    cmd.add_argument('--csv', help='write the spectrum as re,im lines')
    cmd.set_defaults(func=cmd_eig)

    cmd = subparsers.add_parser('compute-z',
                                help='contour-integral deflation subspace')
    _add_problem_flags(cmd)
    _add_contour_flags(cmd)
    _add_subspace_flags(cmd)
    cmd.add_argument('--output', required=True, help='Matrix Market file')
    cmd.set_defaults(func=cmd_compute_z)

    cmd = subparsers.add_parser('cge', help='select independent columns')
    _add_cge_flags(cmd)
    cmd.add_argument('--z', required=True, help='Matrix Market file of Z')
    cmd.add_argument('--output', help='write the selected columns')
    cmd.set_defaults(func=cmd_cge)

    cmd = subparsers.add_parser('solve', help='plain or deflated solve')
    _add_problem_flags(cmd)
    _add_solver_flags(cmd)
    cmd.add_argument('--z', help='deflate with this Matrix Market basis')
    cmd.set_defaults(func=cmd_solve)

    cmd = subparsers.add_parser('run', help='run a computation preset')
    cmd.add_argument('--computation', type=int, choices=range(1, 9))
    _add_problem_flags(cmd)
    _add_contour_flags(cmd)
    _add_subspace_flags(cmd)
    _add_solver_flags(cmd)
    _add_cge_flags(cmd)
    cmd.add_argument('--cge', action='store_true', default=None,
                     help='run the column selection on Z')
    cmd.add_argument('--eig-max-size', type=int)
    cmd.add_argument('--cond-budget', type=int)
    cmd.add_argument('--report', help='report file')
    cmd.add_argument('--format', choices=('json', 'csv'), default='json')
    cmd.set_defaults(func=cmd_run)

    cmd = subparsers.add_parser('report', help='convert or show a report')
    cmd.add_argument('--input', required=True, help='JSON report')
    cmd.add_argument('--format', choices=('table', 'csv', 'json'),
                     default='table')
    cmd.add_argument('--output', help='target file for csv/json')
    cmd.set_defaults(func=cmd_report)
    return parser
# build_parser()

def _config_from_args(args):
    """
    Merge the config file and the flags into an ExperimentConfig.

    Args:
        args (argparse.Namespace): parsed arguments

    Returns:
        ExperimentConfig: validated configuration
    """
    flags = {}
    for key in PARAMETER_FIELDS:
        value = getattr(args, key.replace('-', '_'), None)
        if value is not None:
            flags[key] = value
    return build_config(merge_config(load_config_file(args.config), flags))
# _config_from_args()

def cmd_gen_problem(args):
    """
    gen-problem subcommand
    """
    config = _config_from_args(args)
    problem = load_problem(config)
    write_matrix_market(args.output, problem.matrix,
                        comment=' {}'.format(problem.name))
    if args.rhs_output:
        write_matrix_market(args.rhs_output, problem.rhs.reshape(-1, 1))
    print('N={} nnz={} written to {}'.format(
        problem.size, problem.matrix.nnz, args.output))
    return EXIT_OK
# cmd_gen_problem()

def cmd_eig(args):
    """
    eig subcommand
    """
    config = _config_from_args(args)
    problem = load_problem(config)
    if problem.size > config.eig_max_size:
        raise ValueError('N={} above eig-max-size {}'.format(
            problem.size, config.eig_max_size))
    eigs = dense_eigenvalues(problem.dense())
    summary = spectrum_report(eigs, config.contour)
    if args.csv:
        write_spectrum_csv(args.csv, eigs)
    print('N={} inside={} min|lambda|={:.4g}'.format(
        problem.size, summary.inside_count, summary.min_distance_to_origin))
    return EXIT_OK
# cmd_eig()

def cmd_compute_z(args):
    """
    compute-z subcommand
    """
    config = _config_from_args(args)
    problem = load_problem(config)
    job = SubspaceJob(
        operator=problem.operator,
        probe=random_probe(problem.size, config.m, config.seed),
        contour=config.contour, inner_config=config.inner_config(),
        inner_solver=config.inner_solver_type, seed=config.seed,
        workers=config.workers)
    result = compute_Z(job)
    write_matrix_market(args.output, result.z)
    low, high = result.batch.residual_range
    print('Z {}x{} written to {}, residual range [{:.2e}, {:.2e}], {} '
          'flagged'.format(result.z.shape[0], result.z.shape[1],
                           args.output, low, high,
                           len(result.batch.flagged)))
    return EXIT_OK
# cmd_compute_z()

def cmd_cge(args):
    """
    cge subcommand
    """
    config = _config_from_args(args)
    z_mat = read_matrix_market(args.z)
    if not isinstance(z_mat, np.ndarray):
        z_mat = z_mat.toarray()
    result = cge(z_mat, config.cge_params())
    if args.output and result.rank:
        write_matrix_market(args.output, result.z_out)
    print('rk={} columns={}'.format(result.rank, list(result.columns)))
    return EXIT_OK
# cmd_cge()

def cmd_solve(args):
    """
    solve subcommand
    """
    config = _config_from_args(args)
    problem = load_problem(config)
    outer = config.outer_config(problem.size)
    if args.z:
        z_mat = read_matrix_market(args.z)
        if not isinstance(z_mat, np.ndarray):
            z_mat = z_mat.toarray()
        basis = build_basis(problem.operator, z_mat)
        solution = deflated_solve(problem.operator, problem.rhs, basis,
                                  config.solver, outer)
        report = solution.inner_report
        print('iterations={} converged={} relres1={:.3e} relres2={:.3e} '
              'relerr={:.3e}'.format(
                  report.iterations, report.converged, solution.relres1,
                  solution.relres2, problem.relerr(solution.x)))
        return EXIT_OK

    report = Solver(config.solver, outer).solve(problem.operator,
                                                problem.rhs)
    print('iterations={} converged={} relres={:.3e} relerr={:.3e}'.format(
        report.iterations, report.converged, report.true_relres,
        problem.relerr(report.x)))
    return EXIT_OK
# cmd_solve()

def cmd_run(args):
    """
    run subcommand
    """
    config = _config_from_args(args)
    report = run_computation(config)
    if args.report:
        report_emit(report, args.format, args.report)
    print(summary_table(report))
    return EXIT_OK
# cmd_run()

def cmd_report(args):
    """
    report subcommand
    """
    report = load_report(args.input)
    if args.format == 'table':
        print(summary_table(report))
    elif not args.output:
        raise ValueError('--output is required for format {}'.format(
            args.format))
    else:
        report_emit(report, args.format, args.output)
    return EXIT_OK
# cmd_report()

def main(argv=None):
    """
    Console entry point.

    Args:
        argv (list): arguments, sys.argv[1:] when None

    Returns:
        int: 0 when the pipeline completed (divergence included), 2 on
             configuration or I/O errors
    """
    args = build_parser().parse_args(argv)
    configure_cli_logging(args.log_level)
    logger = get_logger(__name__)
    try:
        return args.func(args)
    except (SpecdeflError, ValueError, OSError) as exc:
        logger.debug('command failed', exc_info=True)
        print('error: {}'.format(exc), file=sys.stderr)
        return EXIT_ERROR
# main()

if __name__ == '__main__':
    sys.exit(main())
