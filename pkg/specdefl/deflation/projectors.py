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
Deflation projectors P = I - A Z M^-1 Z^H and P~ = I - Z M^-1 Z^H A with
M = Z^H A Z, and the deflated solve

    x1 = Z M^-1 Z^H b,  solve P A x# = P b,  x = x1 + P~ x#
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.common.logger import get_logger
from specdefl.deflation.exceptions import SingularDeflationError
from specdefl.krylov import Solver
from specdefl.krylov.operators import apply, apply_adjoint, make_operator
from specdefl.linalg.exceptions import DimensionError
from specdefl.linalg.numcore import DTYPE, as_dense, as_vector, max_abs, \
    norm2, relative_residual
from scipy.sparse.linalg import LinearOperator

import warnings

import numpy as np
import scipy.linalg

#
# CONSTANTS AND DEFINITIONS
#
# LU pivots of M below this fraction of max|m_ij| make M singular
SINGULAR_PIVOT_TOL = 1e-14

#
# CODE
#
@dataclass(frozen=True)
class DeflationBasis:
    """
    Z, the cached product AZ, M = Z^H A Z and its LU factorization
    (partial pivoting) for the operator the basis was built against.
    """
    operator: LinearOperator
    z: np.ndarray
    az: np.ndarray
    m_matrix: np.ndarray
    m_factor: tuple

    @property
    def size(self):
        """
        Number of columns m
        """
        return self.z.shape[1]
    # size

    def solve_m(self, vec, adjoint=False):
        """
        M^-1 v, or M^-H v with adjoint set.
        """
        return scipy.linalg.lu_solve(self.m_factor, vec,
                                     trans=2 if adjoint else 0,
                                     check_finite=False)
    # solve_m()
# DeflationBasis

@dataclass(frozen=True)
class DeflatedSolution:
    """
    Assembled solution x = x1 + x2 of the deflated solve and the report of
    the inner solver on P A x# = P b.
    """
    x: np.ndarray
    x1: np.ndarray
    x2: np.ndarray
    inner_report: object
    relres1: float
    relres2: float
# DeflatedSolution

def build_basis(operator, z_mat):
    """
    Compute AZ and factorize M = Z^H A Z.

    Args:
        operator (matrix or LinearOperator): square A, may be the
                                             preconditioned operator
        z_mat (array_like): N x m matrix Z, m >= 1

    Returns:
        DeflationBasis: the basis

    Raises:
        DimensionError: if Z does not have N rows or has no columns
        SingularDeflationError: if M is numerically singular
    """
    logger = get_logger(__name__)
    operator = make_operator(operator)
    z_mat = as_dense(z_mat, what='Z')
    if z_mat.shape[0] != operator.shape[0] or z_mat.shape[1] == 0:
        raise DimensionError(
            'Z of shape {} does not fit operator of order {}'.format(
                z_mat.shape, operator.shape[0]))

    az_mat = np.empty_like(z_mat, order='F')
    for col in range(z_mat.shape[1]):
        az_mat[:, col] = apply(operator, z_mat[:, col])
    m_matrix = z_mat.conj().T @ az_mat

    with warnings.catch_warnings():
        # exact singularity is reported below with a better message
        warnings.simplefilter('ignore', scipy.linalg.LinAlgWarning)
        m_factor = scipy.linalg.lu_factor(m_matrix, check_finite=False)
    pivots = np.abs(np.diag(m_factor[0]))
    threshold = SINGULAR_PIVOT_TOL * max_abs(m_matrix)
    if not np.all(np.isfinite(pivots)) or np.min(pivots) <= threshold:
        raise SingularDeflationError(
            'M = Z^H A Z is numerically singular (smallest pivot {:.2e}, '
            'threshold {:.2e}); remove dependent columns of Z with the '
            'complete pivoting elimination (cge) first'.format(
                float(np.min(pivots)), threshold), pivots)

    logger.info('deflation basis: N=%d, m=%d', z_mat.shape[0],
                z_mat.shape[1])
    return DeflationBasis(operator, z_mat, az_mat, m_matrix, m_factor)
# build_basis()

def apply_P(basis, vec):
    """
    P v = v - AZ M^-1 Z^H v

    Args:
        basis (DeflationBasis): deflation basis
        vec (array_like): v

    Returns:
        numpy.ndarray: P v
    """
    vec = np.asarray(vec, dtype=DTYPE).ravel()
    return vec - basis.az @ basis.solve_m(basis.z.conj().T @ vec)
# apply_P()

def apply_P_adjoint(basis, vec):
    """
    P^H v = v - Z M^-H (AZ)^H v

    Args:
        basis (DeflationBasis): deflation basis
        vec (array_like): v

    Returns:
        numpy.ndarray: P^H v
    """
    vec = np.asarray(vec, dtype=DTYPE).ravel()
    return vec - basis.z @ basis.solve_m(basis.az.conj().T @ vec,
                                         adjoint=True)
# apply_P_adjoint()

def apply_Ptilde(basis, vec):
    """
    P~ v = v - Z M^-1 Z^H A v

    Args:
        basis (DeflationBasis): deflation basis
        vec (array_like): v

    Returns:
        numpy.ndarray: P~ v
    """
    vec = np.asarray(vec, dtype=DTYPE).ravel()
    a_vec = apply(basis.operator, vec)
    return vec - basis.z @ basis.solve_m(basis.z.conj().T @ a_vec)
# apply_Ptilde()

def deflated_operator(basis):
    """
    The singular operator v -> P A v with adjoint v -> A^H P^H v.

    Args:
        basis (DeflationBasis): deflation basis

    Returns:
        scipy.sparse.linalg.LinearOperator: P A
    """
    return LinearOperator(
        basis.operator.shape,
        matvec=lambda vec: apply_P(basis, apply(basis.operator, vec)),
        rmatvec=lambda vec: apply_adjoint(basis.operator,
                                          apply_P_adjoint(basis, vec)),
        dtype=DTYPE)
# deflated_operator()

def deflated_solve(operator, rhs, basis, inner='gmres', config=None):
    """
    Solve A x = b with deflation: the coarse part x1 = Z M^-1 Z^H b, the
    inner solver on P A x# = P b (stopping relative to ||P b||) and the
    assembled x = x1 + P~ x#. Inner non-convergence is reported, the
    solution is assembled anyway.

    Args:
        operator (matrix or LinearOperator): A, the one the basis was built
                                             against
        rhs (array_like): b
        basis (DeflationBasis): deflation basis
        inner (str): gmres or mbicg
        config (SolverConfig): inner solver stopping criteria

    Returns:
        DeflatedSolution: solution parts, inner report and residuals

    Raises:
        DimensionError: if A, b and the basis do not match
    """
    logger = get_logger(__name__)
    operator = make_operator(operator)
    rhs = as_vector(rhs, what='right hand side')
    if operator.shape != basis.operator.shape or rhs.size != \
            operator.shape[0]:
        raise DimensionError('operator {}, basis {} and rhs {} differ'.format(
            operator.shape, basis.operator.shape, rhs.size))

    x_1 = basis.z @ basis.solve_m(basis.z.conj().T @ rhs)
    p_rhs = apply_P(basis, rhs)
    inner_report = Solver(inner, config).solve(deflated_operator(basis),
                                               p_rhs)
    x_sharp = inner_report.x
    x_2 = apply_Ptilde(basis, x_sharp)
    sol = x_1 + x_2

    relres1 = relative_residual(
        norm2(p_rhs - apply_P(basis, apply(operator, x_sharp))),
        norm2(p_rhs))
    relres2 = relative_residual(norm2(rhs - apply(operator, sol)),
                                norm2(rhs))
    logger.info('deflated %s: %d inner iterations, relres1 %.3e, relres2 '
                '%.3e', inner, inner_report.iterations, relres1, relres2)
    return DeflatedSolution(sol, x_1, x_2, inner_report, relres1, relres2)
# deflated_solve()
