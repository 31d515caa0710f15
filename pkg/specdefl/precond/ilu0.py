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
Incomplete LU factorization with zero fill-in and the preconditioned
operator L^-1 Pr A U^-1 built from it
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.common.logger import get_logger
from specdefl.linalg.exceptions import DimensionError
from specdefl.linalg.numcore import DTYPE, as_sparse, as_vector, max_abs
from scipy.sparse.linalg import LinearOperator, spsolve_triangular

import numpy as np
import scipy.sparse as sps

#
# CONSTANTS AND DEFINITIONS
#
# pivots smaller than this fraction of max|a_ij| are replaced by 1
PIVOT_PATCH_TOL = 1e-14

#
# CODE
#
@dataclass(frozen=True)
class Ilu0Factors:
    """
    Unit lower factor L, upper factor U, row permutation (identity, the
    factorization does not pivot) and the rows whose pivot was patched.
    """
    lower: sps.csr_matrix
    upper: sps.csr_matrix
    perm: np.ndarray
    patched_pivots: tuple

    @property
    def size(self):
        """
        Order of the factors
        """
        return self.lower.shape[0]
    # size
# Ilu0Factors

def _with_diagonal(mat):
    """
    CSR arrays of mat with an explicit (possibly zero) entry on every
    diagonal position.

    Returns:
        tuple: (indptr, indices, data, diag_pos)
    """
    size = mat.shape[0]
    indptr = [0]
    indices = []
    data = []
    diag_pos = np.empty(size, dtype=np.int64)
    for row in range(size):
        start, end = mat.indptr[row], mat.indptr[row + 1]
        cols = mat.indices[start:end]
        vals = mat.data[start:end]
        if row not in cols:
            at = int(np.searchsorted(cols, row))
            cols = np.insert(cols, at, row)
            vals = np.insert(vals, at, 0.0)
        diag_pos[row] = len(indices) + int(np.searchsorted(cols, row))
        indices.extend(cols.tolist())
        data.extend(vals.tolist())
        indptr.append(len(indices))
    return (np.asarray(indptr, dtype=np.int64),
            np.asarray(indices, dtype=np.int64),
            np.asarray(data, dtype=DTYPE), diag_pos)
# _with_diagonal()

def ilu0_factor(matrix):
    """
    IKJ incomplete LU on the sparsity pattern of A (plus the diagonal).

    Pivots with |u_ii| < 1e-14 max|a_ij| are replaced by 1 and recorded, so
    U is always invertible.

    Args:
        matrix (array_like or sparse matrix): square A

    Returns:
        Ilu0Factors: the factors

    Raises:
        DimensionError: if A is not square
    """
    logger = get_logger(__name__)
    mat = as_sparse(matrix)
    size = mat.shape[0]
    if mat.shape != (size, size):
        raise DimensionError('ILU(0) needs a square matrix, got {}'.format(
            mat.shape))

    indptr, indices, data, diag_pos = _with_diagonal(mat)
    threshold = PIVOT_PATCH_TOL * max_abs(mat)
    patched = []
    for row in range(size):
        start, end = indptr[row], indptr[row + 1]
        position = {int(col): pos for pos, col in
                    enumerate(indices[start:end], start)}
        for pos in range(start, diag_pos[row]):
            k = indices[pos]
            data[pos] /= data[diag_pos[k]]
            for k_pos in range(diag_pos[k] + 1, indptr[k + 1]):
                target = position.get(int(indices[k_pos]))
                if target is not None:
                    data[target] -= data[pos] * data[k_pos]
        if abs(data[diag_pos[row]]) < threshold or data[diag_pos[row]] == 0:
            data[diag_pos[row]] = 1.0
            patched.append(row)

    if patched:
        logger.warning('ILU(0): %d zero or tiny pivots replaced by 1 '
                       '(rows %s)', len(patched), patched[:10])
    factored = sps.csr_matrix((data, indices, indptr), shape=mat.shape)
    lower = sps.csr_matrix(sps.tril(factored, k=-1) +
                           sps.identity(size, dtype=DTYPE))
    upper = sps.csr_matrix(sps.triu(factored))
    logger.info('ILU(0): N=%d, nnz(L)=%d, nnz(U)=%d', size, lower.nnz,
                upper.nnz)
    return Ilu0Factors(lower, upper, np.arange(size), tuple(patched))
# ilu0_factor()

class Ilu0Operator(LinearOperator):
    """
    The two-sided preconditioned operator v -> L^-1 Pr A U^-1 v, with its
    adjoint and the companion transforms of the right hand side and of the
    solution.
    """

    def __init__(self, factors, matrix):
        """
        Constructor

        Args:
            factors (Ilu0Factors): ILU(0) factors of matrix
            matrix (array_like or sparse matrix): A

        Raises:
            DimensionError: if the factor and matrix sizes differ
        """
        mat = as_sparse(matrix)
        if mat.shape != (factors.size, factors.size):
            raise DimensionError(
                'factors of order {} do not match matrix {}'.format(
                    factors.size, mat.shape))
        super().__init__(DTYPE, mat.shape)
        self.factors = factors
        self._mat = mat
        self._mat_h = as_sparse(mat.conj().T)
        self._lower_h = sps.csr_matrix(factors.lower.conj().T)
        self._upper_h = sps.csr_matrix(factors.upper.conj().T)
        self._inv_perm = np.argsort(factors.perm)
    # __init__()

    def solve_lower(self, vec):
        """
        L^-1 v
        """
        return spsolve_triangular(self.factors.lower, vec, lower=True,
                                  unit_diagonal=True)
    # solve_lower()

    def solve_upper(self, vec):
        """
        U^-1 v
        """
        return spsolve_triangular(self.factors.upper, vec, lower=False)
    # solve_upper()

    def _matvec(self, x):
        """
        L^-1 Pr A U^-1 x
        """
        vec = np.asarray(x, dtype=DTYPE).ravel()
        vec = self._mat @ self.solve_upper(vec)
        return self.solve_lower(vec[self.factors.perm])
    # _matvec()

    def _rmatvec(self, x):
        """
        U^-H A^H Pr^T L^-H x
        """
        vec = np.asarray(x, dtype=DTYPE).ravel()
        vec = spsolve_triangular(self._lower_h, vec, lower=False,
                                 unit_diagonal=True)
        vec = self._mat_h @ vec[self._inv_perm]
        return spsolve_triangular(self._upper_h, vec, lower=True)
    # _rmatvec()

    def transform_rhs(self, rhs):
        """
        b~ = L^-1 Pr b

        Args:
            rhs (array_like): b

        Returns:
            numpy.ndarray: preconditioned right hand side
        """
        rhs = as_vector(rhs, what='right hand side')
        return self.solve_lower(rhs[self.factors.perm])
    # transform_rhs()

    def back_map(self, sol):
        """
        x = U^-1 x~

        Args:
            sol (array_like): solution of the preconditioned system

        Returns:
            numpy.ndarray: solution of the original system
        """
        return self.solve_upper(as_vector(sol, what='solution'))
    # back_map()

    def dense(self):
        """
        Materialize the preconditioned matrix, for small problems only.

        Returns:
            numpy.ndarray: dense L^-1 Pr A U^-1, column-major
        """
        eye = np.eye(self.shape[0], dtype=DTYPE)
        inner = self._mat @ spsolve_triangular(self.factors.upper, eye,
                                               lower=False)
        return np.asfortranarray(spsolve_triangular(
            self.factors.lower, inner[self.factors.perm, :], lower=True,
            unit_diagonal=True))
    # dense()
# Ilu0Operator

def ilu0_operator(factors, matrix):
    """
    Build the preconditioned operator of A from its ILU(0) factors.

    Args:
        factors (Ilu0Factors): factors of matrix
        matrix (array_like or sparse matrix): A

    Returns:
        Ilu0Operator: operator with transform_rhs and back_map companions
    """
    return Ilu0Operator(factors, matrix)
# ilu0_operator()
