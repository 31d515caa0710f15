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
Rank detection and column selection of a deflation basis by Gaussian
elimination with complete pivoting on the Gram matrix Z^H Z.
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.common.logger import get_logger
from specdefl.linalg.numcore import as_dense

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
DEFAULT_ALPHA = 1e-8
DEFAULT_TOL_CGE = 1e-2

#
# CODE
#
@dataclass(frozen=True)
class CgeParams:
    """
    Absolute threshold alpha (gates the all-zero case only) and relative
    stopping tolerance tol_cge.
    """
    alpha: float = DEFAULT_ALPHA
    tol_cge: float = DEFAULT_TOL_CGE

    def __post_init__(self):
        """
        Raises:
            ValueError: if alpha <= 0 or tol_cge is not in (0, 1)
        """
        if not self.alpha > 0:
            raise ValueError('alpha must be positive, got {}'.format(
                self.alpha))
        if not 0 < self.tol_cge < 1:
            raise ValueError('tol_cge must be in (0, 1), got {}'.format(
                self.tol_cge))
    # __post_init__()
# CgeParams

@dataclass(frozen=True)
class CgeResult:
    """
    Selected columns, detected rank and the input column index of each
    selected column.
    """
    z_out: np.ndarray
    rank: int
    columns: tuple
# CgeResult

def _pivot(gram, start):
    """
    Position of the largest magnitude entry of the trailing block
    gram[start:, start:]. Ties go to the smallest row, then column.

    Args:
        gram (numpy.ndarray): working matrix
        start (int): first row/column of the trailing block

    Returns:
        tuple: (row, col, magnitude) in full-matrix indices
    """
    block = np.abs(gram[start:, start:])
    # argmax scans row-major and returns the first maximum
    flat = int(np.argmax(block))
    row, col = divmod(flat, block.shape[1])
    return row + start, col + start, float(block[row, col])
# _pivot()

def _swap_to(gram, order, pos, row, col):
    """
    Move the pivot (row, col) to (pos, pos): swap columns and rows of the
    Gram matrix, record the column swap in the permutation of Z.
    """
    gram[:, [pos, col]] = gram[:, [col, pos]]
    gram[[pos, row], :] = gram[[row, pos], :]
    order[pos], order[col] = order[col], order[pos]
# _swap_to()

def cge(z_mat, params=None):
    """
    Detect the numerical rank of Z and select linearly independent columns.

    The Gram matrix Z^H Z is reduced to upper triangular form by Gaussian
    elimination with complete pivoting. Row swaps only touch the Gram
    matrix, column swaps are mirrored on the columns of Z. The elimination
    stops when the largest trailing entry relative to the first pivot drops
    below tol_cge.

    Args:
        z_mat (array_like): N x m matrix
        params (CgeParams): thresholds, defaults when None

    Returns:
        CgeResult: first rk columns of the column-permuted Z

    Raises:
        DimensionError: if Z is not two dimensional
        NonFiniteError: if Z has NaN/Inf entries
    """
    logger = get_logger(__name__)
    if params is None:
        params = CgeParams()
    z_mat = as_dense(z_mat, what='Z')
    size = z_mat.shape[1]
    empty = np.zeros((z_mat.shape[0], 0), dtype=z_mat.dtype, order='F')
    if size == 0:
        return CgeResult(empty, 0, ())

    gram = z_mat.conj().T @ z_mat
    order = list(range(size))
    rank = size

    row, col, magnitude = _pivot(gram, 0)
    if magnitude < params.alpha:
        logger.info('cge: Gram matrix below alpha=%.1e, rank 0',
                    params.alpha)
        return CgeResult(empty, 0, ())
    # the first pivot becomes the reference for the relative test
    alpha = magnitude
    _swap_to(gram, order, 0, row, col)

    for j in range(size - 1):
        pivot = gram[j, j]
        for i in range(j + 1, size):
            gram[i, j:] -= (gram[i, j] / pivot) * gram[j, j:]
        row, col, magnitude = _pivot(gram, j + 1)
        if magnitude / alpha < params.tol_cge:
            rank = j + 1
            break
        _swap_to(gram, order, j + 1, row, col)

    selected = tuple(order[:rank])
    logger.info('cge: rank %d of %d columns, kept %s', rank, size,
                list(selected))
    return CgeResult(np.asfortranarray(z_mat[:, list(selected)]), rank,
                     selected)
# cge()
