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
Deflation subspace from the spectral projector of a contour,

    Z = (r/2) sum_k w_k e^{i pi theta_k} ((c + r e^{i pi theta_k}) I - A)^-1 Y

where the m q shifted systems are solved by a Krylov solver in parallel.
"""

#
# IMPORTS
#
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from specdefl.common.logger import get_logger
from specdefl.common.utils import Stopwatch
from specdefl.deflation.exceptions import ContourError
from specdefl.krylov import Solver, SolverConfig
from specdefl.krylov.exceptions import OperatorNaNError
from specdefl.krylov.operators import apply, make_operator, \
    shifted_operator
from specdefl.linalg.exceptions import DimensionError
from specdefl.linalg.numcore import DTYPE, as_dense, norm2, \
    relative_residual
from specdefl.linalg.quadrature import Contour

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
__all__ = ['Contour', 'SubspaceJob', 'ShiftedBatch', 'random_probe',
           'shifted_solve_batch', 'compute_Z']

DEFAULT_INNER_CONFIG = SolverConfig(tol=1e-15, maxit=500)

#
# CODE
#
@dataclass(frozen=True)
class SubspaceJob:
    """
    Everything needed to compute Z: the operator, the probe block Y, the
    contour and the inner solver setup. With inner_config.initial_guess set
    to 'random', every shifted system gets its own start vector seeded by
    (seed, node, column) so results do not depend on thread scheduling.
    """
    operator: object
    probe: np.ndarray
    contour: Contour
    inner_config: SolverConfig = DEFAULT_INNER_CONFIG
    inner_solver: str = 'gmres'
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        """
        Raises:
            DimensionError: if the probe does not fit the operator
            ValueError: if workers < 1
        """
        probe = as_dense(self.probe, what='Y')
        size = self.operator.shape[0]
        if probe.shape[0] != size or probe.shape[1] < 1:
            raise DimensionError(
                'probe block of shape {} does not fit operator of order '
                '{}'.format(probe.shape, size))
        if self.workers < 1:
            raise ValueError('workers must be >= 1, got {}'.format(
                self.workers))
        object.__setattr__(self, 'probe', probe)
    # __post_init__()
# SubspaceJob

@dataclass
class ShiftedBatch:
    """
    Solutions X_k of the shifted systems (one N x m block per node), their
    true relative residuals and iteration counts (q x m) and the flagged
    (node, column) pairs whose solve failed, broke down or did not converge.
    """
    solutions: list
    residuals: np.ndarray
    iterations: np.ndarray
    flagged: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def residual_range(self):
        """
        (min, max) of the true relative residuals

        Returns:
            tuple: two floats
        """
        return float(np.min(self.residuals)), float(np.max(self.residuals))
    # residual_range
# ShiftedBatch

@dataclass(frozen=True)
class SubspaceResult:
    """
    Z together with the batch data it was computed from
    """
    z: np.ndarray
    batch: ShiftedBatch
# SubspaceResult

def random_probe(size, cols, seed=0):
    """
    Real standard normal N x m probe block.

    Args:
        size (int): N
        cols (int): m
        seed (int): generator seed

    Returns:
        numpy.ndarray: complex column-major block with zero imaginary part
    """
    rng = np.random.default_rng(seed)
    return np.asfortranarray(rng.standard_normal((size, cols)).astype(DTYPE))
# random_probe()

def _solve_one(job, shifted, node, col):
    """
    Solve one shifted system and measure its true residual.

    Returns:
        tuple: (node, col, solution, relres, iterations, ok)
    """
    rhs = job.probe[:, col]
    config = job.inner_config
    if isinstance(config.initial_guess, str) and \
            config.initial_guess == 'random':
        rng = np.random.default_rng([job.seed, node, col])
        config = replace(config, initial_guess=rng.standard_normal(
            rhs.size))
    try:
        report = Solver(job.inner_solver, config).solve(shifted, rhs)
    except OperatorNaNError:
        return node, col, np.zeros(rhs.size, dtype=DTYPE), np.inf, \
            config.maxit, False
    sol = report.x
    relres = relative_residual(norm2(rhs - apply(shifted, sol)), norm2(rhs))
    ok = bool(np.all(np.isfinite(sol))) and report.converged and \
        not report.breakdown
    if not np.all(np.isfinite(sol)):
        sol = np.zeros(rhs.size, dtype=DTYPE)
        relres = np.inf
    return node, col, sol, relres, report.iterations, ok
# _solve_one()

def shifted_solve_batch(job):
    """
    Solve ((c + r e^{i pi theta_k}) I - A) x = y_j for every quadrature node
    k and probe column j. The systems are independent and run on a thread
    pool of job.workers threads.

    Args:
        job (SubspaceJob): the job

    Returns:
        ShiftedBatch: solutions, residuals and flags

    Raises:
        ContourError: if every system of one node failed
    """
    logger = get_logger(__name__)
    operator = make_operator(job.operator)
    shifts, _ = job.contour.nodes()
    size, cols = job.probe.shape
    shifted = [shifted_operator(operator, shift) for shift in shifts]
    tasks = [(node, col) for node in range(shifts.size)
             for col in range(cols)]

    solutions = [np.zeros((size, cols), dtype=DTYPE, order='F')
                 for _ in shifts]
    residuals = np.zeros((shifts.size, cols))
    iterations = np.zeros((shifts.size, cols), dtype=np.int64)
    flagged = []
    logger.info('solving %d shifted systems (q=%d, m=%d) with %s on %d '
                'threads', len(tasks), shifts.size, cols, job.inner_solver,
                job.workers)
    with Stopwatch() as watch:
        with ThreadPoolExecutor(max_workers=job.workers) as pool:
            results = pool.map(
                lambda task: _solve_one(job, shifted[task[0]], *task),
                tasks)
            for node, col, sol, relres, its, ok in results:
                solutions[node][:, col] = sol
                residuals[node, col] = relres
                iterations[node, col] = its
                if not ok:
                    flagged.append((node, col))

    for node in range(shifts.size):
        if all(not np.isfinite(residuals[node, col]) for col in range(cols)):
            raise ContourError(
                'all shifted systems failed at node {} (shift {}), the '
                'contour may pass through an eigenvalue'.format(
                    node, shifts[node]), node)
    if flagged:
        logger.warning('%d of %d shifted systems flagged (not converged or '
                       'broken down)', len(flagged), len(tasks))
    batch = ShiftedBatch(solutions, residuals, iterations, flagged,
                         watch.elapsed)
    logger.info('shifted systems: relative residual range [%.2e, %.2e], '
                '%.2fs', *batch.residual_range, watch.elapsed)
    return batch
# shifted_solve_batch()

def compute_Z(job):
    """
    Quadrature sum of the shifted solutions, accumulated over the nodes in
    ascending order.

    Args:
        job (SubspaceJob): the job

    Returns:
        SubspaceResult: Z (N x m, column-major) and the batch data
    """
    batch = shifted_solve_batch(job)
    _, factors = job.contour.nodes()
    z_mat = np.zeros(job.probe.shape, dtype=DTYPE, order='F')
    for factor, block in zip(factors, batch.solutions):
        z_mat += factor * block
    return SubspaceResult(z_mat, batch)
# compute_Z()
