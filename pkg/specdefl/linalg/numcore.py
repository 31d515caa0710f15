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
Complex dense/sparse primitives shared by all the numeric modules.

Vectors are one dimensional complex128 arrays, dense matrices are complex128
arrays in column-major (Fortran) order and sparse matrices are complex128
CSR matrices in canonical form (sorted indices, no duplicates). Real input is
promoted to complex on the way in.
"""

#
# IMPORTS
#
from specdefl.linalg.exceptions import DimensionError, NonFiniteError

import numpy as np
import scipy.sparse as sps

#
# CONSTANTS AND DEFINITIONS
#
DTYPE = np.complex128

#
# CODE
#
def _check_finite(data, what):
    """
    Raise if the array holds NaN or Inf.

    Args:
        data (numpy.ndarray): values to check
        what (str): operand name for the error message

    Raises:
        NonFiniteError: if a non finite entry is found
    """
    if data.size and not np.all(np.isfinite(data)):
        raise NonFiniteError('{} contains NaN or Inf entries'.format(what))
# _check_finite()

def as_vector(data, what='vector'):
    """
    Convert to a finite complex vector (always a new array, so no aliasing
    with the caller's data).

    Args:
        data (array_like): one dimensional data
        what (str): operand name for error messages

    Returns:
        numpy.ndarray: complex128 vector

    Raises:
        DimensionError: if data is not one dimensional or empty
        NonFiniteError: if data has NaN/Inf
    """
    vec = np.array(data, dtype=DTYPE)
    if vec.ndim != 1 or vec.size == 0:
        raise DimensionError(
            '{} must be a non-empty 1-D array, got shape {}'.format(
                what, vec.shape))
    _check_finite(vec, what)
    return vec
# as_vector()

def as_dense(data, what='matrix'):
    """
    Convert to a finite complex column-major dense matrix.

    Args:
        data (array_like or sparse matrix): two dimensional data
        what (str): operand name for error messages

    Returns:
        numpy.ndarray: complex128 Fortran ordered array

    Raises:
        DimensionError: if data is not two dimensional
        NonFiniteError: if data has NaN/Inf
    """
    if sps.issparse(data):
        data = data.toarray()
    mat = np.array(data, dtype=DTYPE, order='F')
    if mat.ndim != 2:
        raise DimensionError('{} must be 2-D, got shape {}'.format(
            what, mat.shape))
    _check_finite(mat, what)
    return mat
# as_dense()

def as_sparse(data, what='matrix'):
    """
    Convert to a finite complex CSR matrix in canonical form.

    Args:
        data (array_like or sparse matrix): two dimensional data
        what (str): operand name for error messages

    Returns:
        scipy.sparse.csr_matrix: complex128 CSR matrix with sorted indices

    Raises:
        DimensionError: if data is not two dimensional
        NonFiniteError: if data has NaN/Inf
    """
    if sps.issparse(data):
        mat = sps.csr_matrix(data, dtype=DTYPE, copy=True)
    else:
        dense = np.asarray(data)
        if dense.ndim != 2:
            raise DimensionError('{} must be 2-D, got shape {}'.format(
                what, dense.shape))
        mat = sps.csr_matrix(dense, dtype=DTYPE)
    mat.sum_duplicates()
    mat.sort_indices()
    _check_finite(mat.data, what)
    return mat
# as_sparse()

def identity(size):
    """
    Sparse complex identity of the given order.

    Args:
        size (int): order

    Returns:
        scipy.sparse.csr_matrix: identity matrix
    """
    return sps.identity(size, dtype=DTYPE, format='csr')
# identity()

def spmv(mat, vec):
    """
    Sparse (or dense) matrix times vector.

    Args:
        mat (scipy.sparse matrix or numpy.ndarray): operator
        vec (array_like): vector of length mat.shape[1]

    Returns:
        numpy.ndarray: product vector

    Raises:
        DimensionError: on shape mismatch
    """
    vec = np.asarray(vec, dtype=DTYPE)
    if vec.ndim != 1 or mat.shape[1] != vec.shape[0]:
        raise DimensionError(
            'cannot multiply {} matrix by vector of shape {}'.format(
                mat.shape, vec.shape))
    return np.asarray(mat @ vec, dtype=DTYPE).ravel()
# spmv()

def hdot(x_vec, y_vec):
    """
    Conjugated inner product x^H y.

    Args:
        x_vec (array_like): left vector (conjugated)
        y_vec (array_like): right vector

    Returns:
        complex: sum of conj(x_i) * y_i

    Raises:
        DimensionError: on length mismatch
    """
    x_vec = np.asarray(x_vec)
    y_vec = np.asarray(y_vec)
    if x_vec.shape != y_vec.shape or x_vec.ndim != 1:
        raise DimensionError('hdot operands differ: {} vs {}'.format(
            x_vec.shape, y_vec.shape))
    return complex(np.vdot(x_vec, y_vec))
# hdot()

def norm2(vec):
    """
    Euclidean norm, sqrt(Re hdot(x, x)) computed without overflow.

    Args:
        vec (array_like): vector

    Returns:
        float: 2-norm
    """
    return float(np.linalg.norm(vec))
# norm2()

def relative_residual(residual_norm, reference_norm):
    """
    Ratio of a residual norm to a reference norm. A zero reference gives the
    absolute residual so that the all-zero right hand side converges at once.

    Args:
        residual_norm (float): norm of the residual
        reference_norm (float): norm of the right hand side

    Returns:
        float: relative residual
    """
    if reference_norm == 0.0:
        return float(residual_norm)
    return float(residual_norm) / float(reference_norm)
# relative_residual()

def max_abs(mat):
    """
    Largest entry magnitude of a dense or sparse matrix.

    Args:
        mat (numpy.ndarray or scipy.sparse matrix): matrix

    Returns:
        float: max |a_ij|, 0 for an empty matrix
    """
    data = mat.data if sps.issparse(mat) else np.asarray(mat)
    if data.size == 0:
        return 0.0
    return float(np.max(np.abs(data)))
# max_abs()
