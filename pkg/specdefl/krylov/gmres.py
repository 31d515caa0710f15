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
GMRES with modified Gram-Schmidt Arnoldi and complex Givens rotations,
unrestarted by default
"""

#
# IMPORTS
#
from specdefl.krylov.base import SolveReport, SolverBase
from specdefl.linalg.numcore import DTYPE, norm2, relative_residual

import numpy as np
import scipy.linalg

#
# CONSTANTS AND DEFINITIONS
#
# h_{j+1,j} below this fraction of ||A v_j|| means an invariant subspace
HAPPY_BREAKDOWN_TOL = 1e-14
# Givens estimate and true residual may differ by this many tolerances
MISMATCH_FACTOR = 10.0
# initial number of basis columns, the basis doubles when full
INITIAL_CAPACITY = 32

#
# CODE
#
def givens_rotation(a_val, b_val):
    """
    Complex plane rotation G = [[c, s], [-conj(s), c]] with real c such that
    G [a, b]^T = [r, 0]^T.

    Args:
        a_val (complex): entry kept
        b_val (complex): entry annihilated

    Returns:
        tuple: (c, s)
    """
    abs_a = abs(a_val)
    if abs_a == 0.0:
        return 0.0, complex(1.0)
    denom = np.hypot(abs_a, abs(b_val))
    return abs_a / denom, complex(
        (a_val / abs_a) * np.conj(b_val) / denom)
# givens_rotation()

class _Basis:
    """
    Arnoldi vectors in a column-major array grown by doubling
    """
    def __init__(self, size, capacity):
        self._data = np.empty((size, min(capacity, INITIAL_CAPACITY)),
                              dtype=DTYPE, order='F')
        self._capacity = capacity
        self.count = 0
    # __init__()

    def append(self, vec):
        """
        Store a new column, growing the array when full.
        """
        if self.count == self._data.shape[1]:
            cols = min(2 * self._data.shape[1], self._capacity)
            grown = np.empty((self._data.shape[0], cols), dtype=DTYPE,
                             order='F')
            grown[:, :self.count] = self._data[:, :self.count]
            self._data = grown
        self._data[:, self.count] = vec
        self.count += 1
    # append()

    def column(self, idx):
        """
        View of a stored column.
        """
        return self._data[:, idx]
    # column()

    def combine(self, coeffs):
        """
        V[:, :k] @ y for the first k = len(y) columns.
        """
        return self._data[:, :coeffs.size] @ coeffs
    # combine()
# _Basis

class Gmres(SolverBase):
    """
    Generalized minimal residual method
    """

    SOLVER_ID = 'gmres'

    def _cycle(self, operator, residual, rhs_norm, budget, history,
               first_iteration):
        """
        One Arnoldi cycle of at most budget steps started from residual.

        Args:
            operator (LinearOperator): A
            residual (numpy.ndarray): r_0 of the cycle, nonzero
            rhs_norm (float): ||b||
            budget (int): maximum number of steps of the cycle
            history (list): relative residual estimates, appended to
            first_iteration (int): global number of the first step

        Returns:
            tuple: (correction V y, steps, converged by estimate, singular
                   breakdown)
        """
        tol = self.config.tol
        size = residual.size
        beta = norm2(residual)
        basis = _Basis(size, budget + 1)
        basis.append(residual / beta)
        r_cols = []
        rotations = []
        g_vec = np.zeros(budget + 1, dtype=DTYPE)
        g_vec[0] = beta
        steps = 0
        converged = False
        singular = False

        while steps < budget:
            j = steps
            w_vec = self._apply(operator, basis.column(j),
                                first_iteration + j)
            w_norm = norm2(w_vec)
            h_col = np.zeros(j + 2, dtype=DTYPE)
            # modified Gram-Schmidt
            for i in range(j + 1):
                v_i = basis.column(i)
                h_col[i] = np.vdot(v_i, w_vec)
                w_vec -= h_col[i] * v_i
            h_next = norm2(w_vec)
            h_col[j + 1] = h_next
            happy = h_next <= HAPPY_BREAKDOWN_TOL * w_norm

            for i, (c_val, s_val) in enumerate(rotations):
                top = c_val * h_col[i] + s_val * h_col[i + 1]
                h_col[i + 1] = -np.conj(s_val) * h_col[i] + \
                    c_val * h_col[i + 1]
                h_col[i] = top
            if happy and np.hypot(abs(h_col[j]), h_next) <= \
                    HAPPY_BREAKDOWN_TOL * w_norm:
                # A v_j lies in the span of the previous images: the step
                # adds nothing and R would be singular
                singular = True
                break
            c_val, s_val = givens_rotation(h_col[j], h_col[j + 1])
            h_col[j] = c_val * h_col[j] + s_val * h_col[j + 1]
            h_col[j + 1] = 0.0
            rotations.append((c_val, s_val))
            g_vec[j + 1] = -np.conj(s_val) * g_vec[j]
            g_vec[j] = c_val * g_vec[j]
            r_cols.append(h_col[:j + 1])

            steps += 1
            estimate = relative_residual(abs(g_vec[j + 1]), rhs_norm)
            history.append(estimate)
            self._logger.debug('gmres it %d: relres %.3e',
                               first_iteration + j, estimate)
            if estimate < tol:
                converged = True
                break
            if happy:
                break
            basis.append(w_vec / h_next)

        if steps == 0:
            return np.zeros(size, dtype=DTYPE), 0, False, singular
        r_mat = np.zeros((steps, steps), dtype=DTYPE, order='F')
        for col, values in enumerate(r_cols):
            r_mat[:col + 1, col] = values
        coeffs = scipy.linalg.solve_triangular(r_mat, g_vec[:steps],
                                               check_finite=False)
        return basis.combine(coeffs), steps, converged, singular
    # _cycle()

    def _iterate(self, operator, rhs, x_0):
        """
        Run restart cycles until convergence or maxit steps.

        Args:
            operator (LinearOperator): A
            rhs (numpy.ndarray): b
            x_0 (numpy.ndarray): start vector

        Returns:
            SolveReport: the outcome
        """
        tol = self.config.tol
        maxit = int(self.config.maxit)
        cycle_len = int(self.config.restart) if self.config.restart \
            else maxit
        rhs_norm = norm2(rhs)
        sol = x_0
        history = []
        iterations = 0
        cycles = 0

        self._logger.info(
            'gmres: N=%d, up to %d basis vectors per cycle (%.1f MiB)',
            rhs.size, min(cycle_len, maxit) + 1,
            (min(cycle_len, maxit) + 1) * rhs.size * 16 / 2 ** 20)

        residual = rhs - self._apply(operator, sol, 0)
        relres = relative_residual(norm2(residual), rhs_norm)
        start_relres = relres
        converged = relres < tol
        stagnated = False
        while not converged and not stagnated and iterations < maxit:
            budget = min(cycle_len, maxit - iterations)
            correction, steps, converged, stagnated = self._cycle(
                operator, residual, rhs_norm, budget, history, iterations)
            sol = sol + correction
            iterations += steps
            cycles += 1
            residual = rhs - self._apply(operator, sol, iterations)
            relres = relative_residual(norm2(residual), rhs_norm)
        if stagnated:
            # the Krylov space is invariant, another cycle repeats this one
            self._logger.warning(
                'gmres: breakdown without convergence after %d iterations',
                iterations)

        best = min(history) if history else start_relres
        mismatch = bool(history) and \
            abs(relres - history[-1]) > MISMATCH_FACTOR * tol
        if mismatch:
            self._logger.warning(
                'gmres: Givens estimate %.3e differs from true relative '
                'residual %.3e', history[-1], relres)
        return SolveReport(
            x=sol, iterations=iterations, relres_history=history,
            converged=best < tol, best_relres=best, true_relres=relres,
            final_relres=history[-1] if history else start_relres,
            residual_mismatch=mismatch, breakdown=stagnated, cycles=cycles)
    # _iterate()
# Gmres

def gmres(operator, rhs, config=None):
    """
    Solve A x = b by GMRES.

    Args:
        operator (matrix or LinearOperator): A
        rhs (array_like): b
        config (SolverConfig): stopping criteria

    Returns:
        SolveReport: solution and convergence data
    """
    return Gmres(config).solve(operator, rhs)
# gmres()
