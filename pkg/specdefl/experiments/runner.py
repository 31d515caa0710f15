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
Pipelines of the eight computations: plain solve, deflation with exact
eigenvectors, deflation with contour-integral subspaces (optionally
cleaned by CGE and with random inner start vectors)
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.common.exceptions import SpecdeflError
from specdefl.common.logger import get_logger
from specdefl.common.utils import Stopwatch
from specdefl.deflation.projectors import build_basis, deflated_solve
from specdefl.deflation.spectral import SubspaceJob, compute_Z, \
    random_probe
from specdefl.experiments.report import ExperimentReport, StageResult
from specdefl.krylov import Solver
from specdefl.krylov.operators import apply, make_operator
from specdefl.linalg.cge import cge
from specdefl.linalg.eigtools import cond2, count_inside, \
    dense_eigenvalues, eigenvectors_inside
from specdefl.linalg.mmio import read_matrix_market
from specdefl.linalg.numcore import norm2, relative_residual
from specdefl.precond.ilu0 import ilu0_factor, ilu0_operator
from specdefl.problems.convdiff import ConvDiffSpec, convdiff_assemble, \
    rhs_ones

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
@dataclass
class Problem:
    """
    The linear system seen by the solvers (operator, rhs) plus what is
    needed to judge the solution: the original matrix, the exact solution
    and the map from the system's solution back to the original unknowns.
    """
    name: str
    matrix: object
    operator: object
    rhs: np.ndarray
    exact: np.ndarray
    preconditioner: object = None

    @property
    def size(self):
        """
        Order N
        """
        return self.rhs.size
    # size

    def back_map(self, sol):
        """
        Solution of the original system from the solution of the
        (possibly preconditioned) system.
        """
        if self.preconditioner is None:
            return sol
        return self.preconditioner.back_map(sol)
    # back_map()

    def dense(self):
        """
        Dense form of the operator for the eigen diagnostics
        """
        if self.preconditioner is None:
            return self.matrix.toarray()
        return self.preconditioner.dense()
    # dense()

    def relerr(self, sol):
        """
        ||x - x*|| / ||x*|| for a solution of the system
        """
        exact_norm = norm2(self.exact)
        return relative_residual(norm2(self.back_map(sol) - self.exact),
                                 exact_norm)
    # relerr()
# Problem

def load_problem(config):
    """
    Assemble or read the matrix with b = A 1, applying the ILU(0)
    preconditioner when requested.

    Args:
        config (ExperimentConfig): configuration

    Returns:
        Problem: the system
    """
    if config.problem == 'convdiff':
        matrix = convdiff_assemble(ConvDiffSpec(config.n, config.re))
        name = 'convdiff(n={}, Re={:g})'.format(config.n, config.re)
    else:
        matrix = read_matrix_market(config.matrix)
        name = config.matrix
    rhs = rhs_ones(matrix)
    exact = np.ones(matrix.shape[0], dtype=complex)
    if config.problem != 'mmfile-ilu0':
        return Problem(name, matrix, make_operator(matrix), rhs, exact)

    factors = ilu0_factor(matrix)
    operator = ilu0_operator(factors, matrix)
    return Problem(name + '+ilu0', matrix, operator,
                   operator.transform_rhs(rhs), exact, operator)
# load_problem()

class _Pipeline:
    """
    Runs the stages of one computation and records them in the report
    """

    def __init__(self, config):
        """
        Constructor

        Args:
            config (ExperimentConfig): configuration
        """
        self.config = config
        self.report = ExperimentReport(config=config.to_parameters())
        self.problem = None
        self._logger = get_logger(__name__)
    # __init__()

    def _stage(self, name, func):
        """
        Run a stage function, timing it and turning library errors into a
        failed stage.

        Args:
            name (str): stage name
            func (callable): receives the StageResult to fill, returns a
                             value passed back to the caller

        Returns:
            tuple: (StageResult, value or None)
        """
        stage = self.report.add_stage(StageResult(name))
        value = None
        with Stopwatch() as watch:
            try:
                value = func(stage)
            except (SpecdeflError, ValueError, OSError) as exc:
                stage.status = 'failed'
                stage.notes.append(str(exc))
                self._logger.error('stage %s failed: %s', name, exc)
        stage.wall_time = watch.elapsed
        return stage, value
    # _stage()

    def _load(self, stage):
        """
        Problem stage
        """
        problem = load_problem(self.config)
        stage.values.update({
            'problem': problem.name, 'N': problem.size,
            'nnz': int(problem.matrix.nnz)})
        if problem.preconditioner is not None:
            patched = problem.preconditioner.factors.patched_pivots
            stage.values['patched_pivots'] = len(patched)
        return problem
    # _load()

    def _plain_solve(self, stage):
        """
        Undeflated solve
        """
        problem = self.problem
        outer = self.config.outer_config(problem.size)
        result = Solver(self.config.solver, outer).solve(
            problem.operator, problem.rhs)
        relres2 = relative_residual(
            norm2(problem.rhs - apply(problem.operator, result.x)),
            norm2(problem.rhs))
        stage.values.update({
            'iterations': result.iterations, 'converged': result.converged,
            'relres2': relres2, 'relerr': problem.relerr(result.x),
            'breakdown': result.breakdown})
        if not result.converged:
            stage.notes.append('not converged in {} iterations'.format(
                outer.maxit))
        return result
    # _plain_solve()

    def _eigenvectors(self, stage):
        """
        Exact eigenvectors of the eigenvalues inside the contour
        """
        problem = self.problem
        if problem.size > self.config.eig_max_size:
            stage.status = 'skipped'
            stage.notes.append('N={} above eig-max-size {}'.format(
                problem.size, self.config.eig_max_size))
            return None
        dense = problem.dense()
        eigs = dense_eigenvalues(dense)
        inside = count_inside(eigs, self.config.contour)
        stage.values.update({
            'eigs_inside': inside,
            'min_abs_eig': float(np.min(np.abs(eigs)))})
        if inside == 0:
            stage.status = 'failed'
            stage.notes.append('no eigenvalue inside the contour')
            return None
        return eigenvectors_inside(dense, self.config.contour, eigs,
                                   seed=self.config.seed)
    # _eigenvectors()

    def _subspace(self, stage):
        """
        Contour-integral deflation subspace
        """
        problem = self.problem
        config = self.config
        job = SubspaceJob(
            operator=problem.operator,
            probe=random_probe(problem.size, config.m, config.seed),
            contour=config.contour, inner_config=config.inner_config(),
            inner_solver=config.inner_solver_type, seed=config.seed,
            workers=config.workers)
        result = compute_Z(job)
        low, high = result.batch.residual_range
        stage.values.update({
            'm': config.m, 'q': config.quad_order,
            'inner_iterations_max': int(np.max(result.batch.iterations)),
            'relres_range': [low, high],
            'flagged': len(result.batch.flagged)})
        return result.z
    # _subspace()

    def _cge(self, z_mat, stage):
        """
        Column selection of Z
        """
        result = cge(z_mat, self.config.cge_params())
        stage.values.update({'rk': result.rank,
                             'columns': list(result.columns)})
        if result.rank == 0:
            stage.status = 'failed'
            stage.notes.append('Z is numerically zero')
            return None
        return result.z_out
    # _cge()

    def _deflated(self, z_mat, stage):
        """
        Build the basis and run the deflated solve
        """
        problem = self.problem
        config = self.config
        basis = build_basis(problem.operator, z_mat)
        if problem.size * basis.size <= config.cond_budget:
            stage.values['cond_z'] = cond2(basis.z)
            stage.values['cond_m'] = cond2(basis.m_matrix)
        else:
            stage.values['cond_z'] = None
            stage.values['cond_m'] = None
            stage.notes.append('condition numbers not computed (N m > '
                               '{})'.format(config.cond_budget))
        outer = config.outer_config(problem.size)
        solution = deflated_solve(problem.operator, problem.rhs, basis,
                                  config.solver, outer)
        stage.values.update({
            'iterations': solution.inner_report.iterations,
            'converged': solution.inner_report.converged,
            'relres1': solution.relres1, 'relres2': solution.relres2,
            'relerr': problem.relerr(solution.x),
            'breakdown': solution.inner_report.breakdown})
        if not solution.inner_report.converged:
            stage.notes.append('inner solve not converged in {} '
                               'iterations'.format(outer.maxit))
        return solution
    # _deflated()

    def run(self):
        """
        Execute the stages of the configured computation.

        Returns:
            ExperimentReport: the report
        """
        config = self.config
        _, self.problem = self._stage('problem', self._load)
        if self.problem is None:
            return self.report

        if config.pipeline == 'plain':
            stage, _ = self._stage('solve', self._plain_solve)
            self._summarize(stage)
            return self.report

        if config.pipeline == 'eigenvectors':
            _, z_mat = self._stage('eigenvectors', self._eigenvectors)
        else:
            _, z_mat = self._stage('subspace', self._subspace)
            if z_mat is not None and config.cge:
                _, z_mat = self._stage(
                    'cge', lambda stage: self._cge(z_mat, stage))
        if z_mat is None:
            return self.report

        stage, _ = self._stage(
            'deflated_solve', lambda stage: self._deflated(z_mat, stage))
        self._summarize(stage)
        return self.report
    # run()

    def _summarize(self, stage):
        """
        Copy the headline numbers into the summary
        """
        keys = ('iterations', 'converged', 'relres1', 'relres2', 'relerr',
                'cond_z', 'cond_m')
        summary = {key: stage.values[key] for key in keys
                   if key in stage.values}
        for name, key in (('subspace', 'relres_range'), ('cge', 'rk'),
                          ('eigenvectors', 'eigs_inside')):
            other = self.report.stage(name)
            if other is not None and key in other.values:
                summary[key] = other.values[key]
        summary['N'] = self.problem.size
        summary['wall_time'] = sum(item.wall_time
                                   for item in self.report.stages)
        self.report.summary.update(summary)
    # _summarize()
# _Pipeline

def run_computation(config):
    """
    Run one of the eight computations. Stage failures are recorded in the
    report, later stages that depend on them are not run.

    Args:
        config (ExperimentConfig): configuration

    Returns:
        ExperimentReport: the report
    """
    logger = get_logger(__name__)
    logger.info('running computation #%d (%s) on %s', config.computation,
                config.pipeline, config.problem)
    return _Pipeline(config).run()
# run_computation()
