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
Unit tests for the operators module
"""

#
# IMPORTS
#
from scipy.sparse.linalg import LinearOperator
from specdefl.krylov import operators
from specdefl.linalg.exceptions import DimensionError

import numpy as np
import scipy.sparse as sps
import unittest

#
# CONSTANTS AND DEFINITIONS
#
MATRIX = np.array([[1.0, 2.0j], [3.0, 4.0 - 1.0j]])
VECTOR = np.array([1.0 + 1.0j, -2.0])

#
# CODE
#
class TestOperators(unittest.TestCase):
    """
    Wrapping of matrices into operators with adjoints
    """
    def test_dense_and_sparse(self):
        """
        Forward and adjoint actions of wrapped matrices
        """
        for matrix in (MATRIX, sps.csr_matrix(MATRIX)):
            with self.subTest(sparse=sps.issparse(matrix)):
                oper = operators.make_operator(matrix)
                np.testing.assert_allclose(operators.apply(oper, VECTOR),
                                           MATRIX @ VECTOR)
                np.testing.assert_allclose(
                    operators.apply_adjoint(oper, VECTOR),
                    MATRIX.conj().T @ VECTOR)
    # test_dense_and_sparse()

    def test_copy_on_wrap(self):
        """
        Later changes of the caller's matrix do not leak in
        """
        matrix = MATRIX.copy()
        oper = operators.make_operator(matrix)
        matrix[0, 0] = 100.0
        np.testing.assert_allclose(operators.apply(oper, VECTOR),
                                   MATRIX @ VECTOR)
    # test_copy_on_wrap()

    def test_non_square(self):
        """
        Rectangular matrices and operators are rejected
        """
        self.assertRaises(DimensionError, operators.make_operator,
                          np.ones((2, 3)))
        self.assertRaises(DimensionError, operators.make_operator,
                          sps.csr_matrix(np.ones((3, 2))))
        rect = LinearOperator((2, 3), matvec=lambda vec: vec[:2])
        self.assertRaises(DimensionError, operators.make_operator, rect)
    # test_non_square()

    def test_operator_passthrough(self):
        """
        Operators are returned as they are
        """
        oper = operators.make_operator(MATRIX)
        self.assertIs(operators.make_operator(oper), oper)
    # test_operator_passthrough()

    def test_shifted(self):
        """
        sigma I - A and its adjoint
        """
        shift = 0.5 + 2.0j
        oper = operators.shifted_operator(MATRIX, shift)
        shifted = shift * np.eye(2) - MATRIX
        np.testing.assert_allclose(operators.apply(oper, VECTOR),
                                   shifted @ VECTOR)
        np.testing.assert_allclose(operators.apply_adjoint(oper, VECTOR),
                                   shifted.conj().T @ VECTOR)
    # test_shifted()

    def test_missing_adjoint(self):
        """
        Operators without an adjoint action fail clearly
        """
        oper = LinearOperator((2, 2), matvec=lambda vec: vec,
                              dtype=complex)
        self.assertRaises(NotImplementedError, operators.apply_adjoint,
                          oper, VECTOR)
    # test_missing_adjoint()
# TestOperators
