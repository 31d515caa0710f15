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
Modified BiCG: the complex biconjugate gradient recurrence returning the
iterate with the smallest true relative residual of the whole run
"""

#
# IMPORTS
#
from specdefl.krylov.base import SolveReport, SolverBase
from specdefl.krylov.exceptions import SolverError
from specdefl.krylov.operators import apply_adjoint
from specdefl.linalg.numcore import norm2, relative_residual

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
# |rho| or |p~^H A p| below this is a breakdown
BREAKDOWN_TOL = 1e-300

#
# CODE
#
class Mbicg(SolverBase):
    """
    BiCG with best-iterate tracking. The shadow residual starts as r_0 and
    the adjoint action of the operator is required.
    """

    SOLVER_ID = 'mbicg'

    def _adjoint(self, operator, vec):
        """
        A^H v

        Raises:
            SolverError: if the operator has no adjoint action
        """
        try:
            return apply_adjoint(operator, vec)
        except NotImplementedError as exc:
            raise SolverError(
                'mbicg needs an operator with an adjoint action') from exc
    # _adjoint()

    def _iterate(self, operator, rhs, x_0):
        """
        Run the BiCG recurrence for at most maxit iterations.

        Args:
            operator (LinearOperator): A
            rhs (numpy.ndarray): b
            x_0 (numpy.ndarray): start vector

        Returns:
            SolveReport: best iterate and its residual data
        """
        tol = self.config.tol
        maxit = int(self.config.maxit)
        rhs_norm = norm2(rhs)

        sol = x_0.copy()
        res = rhs - self._apply(operator, sol, 0)
        start_relres = relative_residual(norm2(res), rhs_norm)
        if start_relres < tol:
            return SolveReport(
                x=sol, iterations=0, relres_history=[], converged=True,
                best_relres=start_relres, true_relres=start_relres,
                final_relres=start_relres)

        shadow = res.copy()
        dir_vec = res.copy()
        shadow_dir = shadow.copy()
        rho = np.vdot(shadow, res)

        history = []
        best_x = sol.copy()
        best_relres = np.inf
        breakdown = False
        for iteration in range(1, maxit + 1):
            a_dir = self._apply(operator, dir_vec, iteration)
            sigma = np.vdot(shadow_dir, a_dir)
            if abs(sigma) < BREAKDOWN_TOL:
                breakdown = True
                break
            alpha = rho / sigma
            sol += alpha * dir_vec
            res -= alpha * a_dir
            shadow -= np.conj(alpha) * self._adjoint(operator, shadow_dir)

            # residual of the iterate itself, not the recurrence
            relres = relative_residual(
                norm2(rhs - self._apply(operator, sol, iteration)),
                rhs_norm)
            history.append(relres)
            if relres < best_relres:
                best_relres = relres
                best_x = sol.copy()
            self._logger.debug('mbicg it %d: relres %.3e', iteration,
                               relres)
            if relres < tol:
                break

            rho_next = np.vdot(shadow, res)
            if abs(rho_next) < BREAKDOWN_TOL:
                breakdown = True
                break
            beta = rho_next / rho
            rho = rho_next
            dir_vec = res + beta * dir_vec
            shadow_dir = shadow + np.conj(beta) * shadow_dir

        if breakdown:
            self._logger.warning('mbicg: breakdown after %d iterations',
                                 len(history))
        if not history:
            best_relres = start_relres
        return SolveReport(
            x=best_x, iterations=len(history), relres_history=history,
            converged=best_relres < tol, best_relres=best_relres,
            true_relres=best_relres,
            final_relres=history[-1] if history else start_relres,
            breakdown=breakdown)
    # _iterate()
# Mbicg

def mbicg(operator, rhs, config=None):
    """
    Solve A x = b by modified BiCG.

    Args:
        operator (matrix or LinearOperator): A, with adjoint action
        rhs (array_like): b
        config (SolverConfig): stopping criteria

    Returns:
        SolveReport: best iterate and its residual data
    """
    return Mbicg(config).solve(operator, rhs)
# mbicg()
