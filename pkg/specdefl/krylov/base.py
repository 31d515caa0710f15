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
Defines the interface for Krylov solver classes and the configuration and
report types they share
"""

#
# IMPORTS
#
from dataclasses import dataclass, field
from specdefl.common.logger import get_logger
from specdefl.common.utils import Stopwatch
from specdefl.krylov.exceptions import OperatorNaNError
from specdefl.krylov.operators import apply, make_operator
from specdefl.linalg.exceptions import DimensionError
from specdefl.linalg.numcore import DTYPE, as_vector, norm2, \
    relative_residual

import abc

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
INITIAL_GUESS_MODES = ('zero', 'random')

#
# CODE
#
@dataclass(frozen=True)
class SolverConfig:
    """
    Stopping criteria and start vector of a solve. initial_guess is 'zero',
    'random' (seeded standard normal) or a vector.
    """
    tol: float = 1e-7
    maxit: int = 1000
    restart: int = None
    initial_guess: object = 'zero'
    seed: int = 0

    def __post_init__(self):
        """
        Raises:
            ValueError: on out of range values
        """
        if not self.tol > 0:
            raise ValueError('tol must be positive, got {}'.format(self.tol))
        if int(self.maxit) != self.maxit or self.maxit < 1:
            raise ValueError('maxit must be >= 1, got {}'.format(self.maxit))
        if self.restart is not None and (
                int(self.restart) != self.restart or self.restart < 1):
            raise ValueError('restart must be >= 1, got {}'.format(
                self.restart))
        if isinstance(self.initial_guess, str) and \
                self.initial_guess not in INITIAL_GUESS_MODES:
            raise ValueError('initial_guess must be one of {} or a '
                             'vector'.format(INITIAL_GUESS_MODES))
    # __post_init__()
# SolverConfig

@dataclass
class SolveReport:
    """
    Outcome of a solve. relres_history has one entry per iteration and
    converged is true exactly when best_relres < tol.
    """
    x: np.ndarray
    iterations: int
    relres_history: list
    converged: bool
    best_relres: float
    solver: str = ''
    true_relres: float = None
    final_relres: float = None
    residual_mismatch: bool = False
    breakdown: bool = False
    cycles: int = 0
    wall_time: float = 0.0
    notes: list = field(default_factory=list)
# SolveReport

class SolverBase(metaclass=abc.ABCMeta):
    """
    This is the abstract solver class, the concrete solvers implement
    _iterate and share the argument handling done in solve.
    """

    # the identifier for this solver class, should be a lowercase string
    SOLVER_ID = 'base'

    def __init__(self, config=None):
        """
        Constructor

        Args:
            config (SolverConfig): stopping criteria, defaults when None
        """
        self.config = config if config is not None else SolverConfig()
        self._logger = get_logger(__name__)
    # __init__()

    def _initial_guess(self, size):
        """
        Build the start vector from the configured mode.

        Args:
            size (int): problem dimension

        Returns:
            numpy.ndarray: complex start vector (a new array)

        Raises:
            DimensionError: if a given vector has the wrong length
        """
        guess = self.config.initial_guess
        if isinstance(guess, str):
            if guess == 'zero':
                return np.zeros(size, dtype=DTYPE)
            rng = np.random.default_rng(self.config.seed)
            return rng.standard_normal(size).astype(DTYPE)
        guess = as_vector(guess, what='initial guess')
        if guess.size != size:
            raise DimensionError(
                'initial guess has length {}, expected {}'.format(
                    guess.size, size))
        return guess
    # _initial_guess()

    def _apply(self, operator, vec, iteration):
        """
        Operator action with a NaN/Inf check on the result.

        Raises:
            OperatorNaNError: if the product is not finite
        """
        out = apply(operator, vec)
        if not np.all(np.isfinite(out)):
            raise OperatorNaNError(
                '{}: operator produced NaN/Inf at iteration {}'.format(
                    self.SOLVER_ID, iteration), iteration)
        return out
    # _apply()

    def solve(self, operator, rhs):
        """
        Solve A x = b.

        Args:
            operator (matrix or LinearOperator): A
            rhs (array_like): b

        Returns:
            SolveReport: solution and convergence data

        Raises:
            DimensionError: if the operator and rhs do not match
            OperatorNaNError: if the operator output is not finite
        """
        operator = make_operator(operator)
        rhs = as_vector(rhs, what='right hand side')
        if operator.shape[1] != rhs.size:
            raise DimensionError(
                'operator {} does not match right hand side of length '
                '{}'.format(operator.shape, rhs.size))
        x_0 = self._initial_guess(rhs.size)

        with Stopwatch() as watch:
            report = self._iterate(operator, rhs, x_0)
        report.solver = self.SOLVER_ID
        report.wall_time = watch.elapsed
        self._logger.info(
            '%s: N=%d, %d iterations, best relres %.3e, converged=%s, '
            '%.2fs', self.SOLVER_ID, rhs.size, report.iterations,
            report.best_relres, report.converged, report.wall_time)
        return report
    # solve()

    @staticmethod
    def _true_relres(operator, rhs, sol, rhs_norm):
        """
        ||b - A x|| / ||b||, or ||b - A x|| when b = 0.
        """
        return relative_residual(norm2(rhs - apply(operator, sol)), rhs_norm)
    # _true_relres()

    @abc.abstractmethod
    def _iterate(self, operator, rhs, x_0):
        """
        Run the iteration.

        Args:
            operator (LinearOperator): A
            rhs (numpy.ndarray): b
            x_0 (numpy.ndarray): start vector

        Raises:
            NotImplementedError: as it has to be implemented by child class
        """
        raise NotImplementedError()
    # _iterate()
# SolverBase
