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
Unit tests for the rank detection by complete pivoting
"""

#
# IMPORTS
#
from hypothesis import given, settings
from hypothesis import strategies as st
from specdefl.linalg.cge import CgeParams, cge
from specdefl.linalg.exceptions import NonFiniteError

import numpy as np
import unittest

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
def planted_rank(rng, rows, cols, rank):
    """
    Matrix Q C with orthonormal Q (rows x rank) and C (rank x cols) of
    singular values in [1, 1.2], so the numerical rank is unambiguous.

    Args:
        rng (numpy.random.Generator): random source
        rows (int): N
        cols (int): m
        rank (int): planted rank

    Returns:
        numpy.ndarray: the rows x cols matrix
    """
    q_fac, _ = np.linalg.qr(rng.standard_normal((rows, rank)) +
                            1j * rng.standard_normal((rows, rank)))
    u_fac, _ = np.linalg.qr(rng.standard_normal((rank, rank)))
    v_fac, _ = np.linalg.qr(rng.standard_normal((cols, rank)))
    sigma = rng.uniform(1.0, 1.2, rank)
    return q_fac @ (u_fac * sigma) @ v_fac.T
# planted_rank()

def svd_rank(z_mat, tol):
    """
    Numerical rank of Z^H Z at a threshold relative to its largest
    eigenvalue
    """
    sigma = np.linalg.svd(z_mat, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int(np.count_nonzero((sigma / sigma[0]) ** 2 >= tol))
# svd_rank()

class TestCge(unittest.TestCase):
    """
    Gaussian elimination with complete pivoting on the Gram matrix
    """
    def test_params(self):
        """
        Thresholds are validated
        """
        params = CgeParams()
        self.assertEqual((params.alpha, params.tol_cge), (1e-8, 1e-2))
        self.assertRaises(ValueError, CgeParams, 0.0)
        self.assertRaises(ValueError, CgeParams, 1e-8, 1.0)
        self.assertRaises(ValueError, CgeParams, 1e-8, 0.0)
    # test_params()

    def test_zero(self):
        """
        The zero matrix has rank 0 and an empty selection
        """
        result = cge(np.zeros((5, 3)))
        self.assertEqual(result.rank, 0)
        self.assertEqual(result.z_out.shape, (5, 0))
        self.assertEqual(result.columns, ())

        result = cge(np.zeros((4, 0)))
        self.assertEqual(result.rank, 0)
    # test_zero()

    def test_orthonormal(self):
        """
        Orthonormal columns are all kept in order
        """
        z_mat = np.eye(3)[:, :2]
        result = cge(z_mat)
        self.assertEqual(result.rank, 2)
        self.assertEqual(result.columns, (0, 1))
        np.testing.assert_array_equal(result.z_out, z_mat)
    # test_orthonormal()

    def test_scaled_copy(self):
        """
        [z, 2z] keeps the larger column only
        """
        vec = np.array([1.0, 2.0, 2.0j]) / 3.0
        z_mat = np.column_stack([vec, 2 * vec])
        result = cge(z_mat)
        self.assertEqual(result.rank, 1)
        self.assertEqual(result.columns, (1,))
        np.testing.assert_array_equal(result.z_out[:, 0], 2 * vec)
    # test_scaled_copy()

    def test_planted_rank(self):
        """
        A 50 x 10 matrix of rank 6 gives rank 6 and retains input columns
        """
        rng = np.random.default_rng(2024)
        z_mat = planted_rank(rng, 50, 10, 6)
        result = cge(z_mat)
        self.assertEqual(result.rank, 6)
        self.assertEqual(result.rank, svd_rank(z_mat, 1e-2))
        self.assertEqual(len(set(result.columns)), 6)
        for pos, col in enumerate(result.columns):
            np.testing.assert_array_equal(result.z_out[:, pos],
                                          z_mat[:, col])
        self.assertTrue(result.z_out.flags['F_CONTIGUOUS'])
    # test_planted_rank()

    def test_svd_oracle(self):
        """
        Rank agrees with the SVD oracle on random planted instances
        """
        rng = np.random.default_rng(99)
        params = CgeParams(alpha=1e-8, tol_cge=1e-2)
        matches = 0
        for _ in range(50):
            rows = int(rng.integers(20, 101))
            cols = int(rng.integers(2, 21))
            rank = int(rng.integers(1, cols + 1))
            z_mat = planted_rank(rng, rows, cols, rank)
            cge_rank = cge(z_mat, params).rank
            oracle = svd_rank(z_mat, params.tol_cge)
            self.assertLessEqual(abs(cge_rank - oracle), 1)
            matches += int(cge_rank == oracle)
        self.assertGreaterEqual(matches, 48)
    # test_svd_oracle()

    @given(st.permutations(list(range(8))))
    @settings(deadline=None, max_examples=25)
    def test_permutation_equivariance(self, perm):
        """
        Permuting the columns does not change the detected rank
        """
        z_mat = planted_rank(np.random.default_rng(5), 40, 8, 5)
        self.assertEqual(cge(z_mat[:, perm]).rank, cge(z_mat).rank)
    # test_permutation_equivariance()

    def test_relative_alpha(self):
        """
        Only the all-zero test uses the given alpha, tiny but independent
        columns are kept
        """
        z_mat = 1e-3 * np.eye(4)[:, :3]
        self.assertEqual(cge(z_mat, CgeParams(alpha=1e-8)).rank, 3)
        self.assertEqual(cge(z_mat, CgeParams(alpha=1e-2)).rank, 0)
    # test_relative_alpha()

    def test_non_finite(self):
        """
        NaN input is rejected
        """
        z_mat = np.ones((3, 2))
        z_mat[1, 1] = np.nan
        self.assertRaises(NonFiniteError, cge, z_mat)
    # test_non_finite()
# TestCge
