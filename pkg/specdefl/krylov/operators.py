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
Linear operators seen by the Krylov solvers: plain matrices, shifted
matrices sigma I - A and compositions built by the deflation and
preconditioning modules. All of them are scipy LinearOperator instances
carrying both the forward and the adjoint action.
"""

#
# IMPORTS
#
from specdefl.linalg.exceptions import DimensionError
from specdefl.linalg.numcore import DTYPE, as_dense, as_sparse
from scipy.sparse.linalg import LinearOperator

import numpy as np
import scipy.sparse as sps

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
def make_operator(matrix):
    """
    Wrap a sparse or dense square matrix. The conjugate transpose is copied
    once here so the adjoint action is a plain CSR product too.

    Args:
        matrix (scipy.sparse matrix, array_like or LinearOperator): the
            matrix, operators are returned unchanged

    Returns:
        scipy.sparse.linalg.LinearOperator: complex operator with adjoint

    Raises:
        DimensionError: if the matrix is not square
    """
    if isinstance(matrix, LinearOperator):
        if matrix.shape[0] != matrix.shape[1]:
            raise DimensionError('operator must be square, got {}'.format(
                matrix.shape))
        return matrix

    if sps.issparse(matrix):
        forward = as_sparse(matrix)
        adjoint = as_sparse(forward.conj().T)
    else:
        forward = as_dense(matrix)
        adjoint = np.ascontiguousarray(forward.conj().T)
    if forward.shape[0] != forward.shape[1]:
        raise DimensionError('operator must be square, got {}'.format(
            forward.shape))

    return LinearOperator(
        forward.shape, matvec=lambda vec: forward @ vec,
        rmatvec=lambda vec: adjoint @ vec, dtype=DTYPE)
# make_operator()

def shifted_operator(operator, shift):
    """
    The operator sigma I - A, with adjoint conj(sigma) I - A^H.

    Args:
        operator (matrix or LinearOperator): A
        shift (complex): sigma

    Returns:
        scipy.sparse.linalg.LinearOperator: shifted operator
    """
    base = make_operator(operator)
    shift = complex(shift)
    return LinearOperator(
        base.shape,
        matvec=lambda vec: shift * vec - base.matvec(vec),
        rmatvec=lambda vec: shift.conjugate() * vec - base.rmatvec(vec),
        dtype=DTYPE)
# shifted_operator()

def apply_adjoint(operator, vec):
    """
    A^H v, failing clearly when the operator was built without adjoint.

    Args:
        operator (LinearOperator): A
        vec (numpy.ndarray): v

    Returns:
        numpy.ndarray: A^H v

    Raises:
        NotImplementedError: if the operator has no adjoint action
    """
    return np.asarray(operator.rmatvec(vec), dtype=DTYPE).ravel()
# apply_adjoint()

def apply(operator, vec):
    """
    A v as a flat complex vector.

    Args:
        operator (LinearOperator): A
        vec (numpy.ndarray): v

    Returns:
        numpy.ndarray: A v
    """
    return np.asarray(operator.matvec(vec), dtype=DTYPE).ravel()
# apply()
