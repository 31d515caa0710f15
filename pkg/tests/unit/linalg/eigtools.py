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
Unit tests for the eigtools module
"""

#
# IMPORTS
#
from specdefl.linalg import eigtools
from specdefl.linalg.exceptions import DimensionError
from specdefl.linalg.quadrature import Contour

import numpy as np
import os
import tempfile
import unittest

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
def _assert_same_spectrum(test, computed, expected, tol):
    """
    Every computed eigenvalue has a reference eigenvalue nearby and the
    sizes agree
    """
    test.assertEqual(len(computed), len(expected))
    for value in computed:
        test.assertLess(np.min(np.abs(expected - value)), tol)
    for value in expected:
        test.assertLess(np.min(np.abs(computed - value)), tol)
# _assert_same_spectrum()

class TestDenseEigenvalues(unittest.TestCase):
    """
    Hessenberg QR eigenvalues
    """
    def test_triangular(self):
        """
        Eigenvalues of a triangular matrix are its diagonal, sorted
        """
        mat = np.triu(np.arange(1.0, 17.0).reshape(4, 4))
        eigs = eigtools.dense_eigenvalues(mat)
        np.testing.assert_allclose(eigs, [1.0, 6.0, 11.0, 16.0],
                                   atol=1e-12)
    # test_triangular()

    def test_rotation_pairs(self):
        """
        Real matrices with complex conjugate pairs
        """
        mat = np.array([[0.0, -1.0], [1.0, 0.0]])
        eigs = eigtools.dense_eigenvalues(mat)
        np.testing.assert_allclose(eigs, [-1j, 1j], atol=1e-12)
    # test_rotation_pairs()

    def test_random_against_lapack(self):
        """
        Random real and complex matrices agree with numpy
        """
        rng = np.random.default_rng(7)
        real = rng.standard_normal((30, 30))
        cplx = real + 1j * rng.standard_normal((30, 30))
        for mat in (real, cplx):
            _assert_same_spectrum(self, eigtools.dense_eigenvalues(mat),
                                  np.linalg.eigvals(mat), 1e-8)
    # test_random_against_lapack()

    def test_edge_shapes(self):
        """
        Non square matrices fail, the 1x1 and 0x0 cases work
        """
        self.assertRaises(DimensionError, eigtools.dense_eigenvalues,
                          np.ones((2, 3)))
        np.testing.assert_array_equal(
            eigtools.dense_eigenvalues(np.array([[3.0]])), [3.0])
        self.assertEqual(
            eigtools.dense_eigenvalues(np.zeros((0, 0))).size, 0)
    # test_edge_shapes()
# TestDenseEigenvalues

class TestSpectrumTools(unittest.TestCase):
    """
    Counting, reporting and dumping of spectra
    """
    def test_count_and_report(self):
        """
        Eigenvalues on the circle count as inside
        """
        contour = Contour(0.0, 1.0)
        eigs = np.array([0.5, -1.0, 1j, 2.0, -3.0])
        self.assertEqual(eigtools.count_inside(eigs, contour), 3)
        report = eigtools.spectrum_report(eigs, contour)
        self.assertEqual(report.inside_count, 3)
        self.assertEqual(report.min_distance_to_origin, 0.5)
    # test_count_and_report()

    def test_write_csv(self):
        """
        Real and imaginary parts are written with a header
        """
        with tempfile.TemporaryDirectory() as tmp_dir:
            path = os.path.join(tmp_dir, "spectrum.csv")
            eigtools.write_spectrum_csv(path, [1.0 + 2.0j, -0.5])
            with open(path, "r") as csv_fd:
                self.assertEqual(csv_fd.readline().strip(), "re,im")
            data = np.loadtxt(path, delimiter=",", skiprows=1)
        np.testing.assert_array_equal(data, [[1.0, 2.0], [-0.5, 0.0]])
    # test_write_csv()

    def test_eigenvectors_inside(self):
        """
        Inverse iteration finds the eigenvectors of the enclosed
        eigenvalues
        """
        rng = np.random.default_rng(3)
        basis = rng.standard_normal((6, 6))
        diag = np.array([0.1, -0.2, 2.0, 3.0, -4.0, 5.0])
        mat = basis @ np.diag(diag) @ np.linalg.inv(basis)
        vectors = eigtools.eigenvectors_inside(mat, Contour(0.0, 0.5))
        self.assertEqual(vectors.shape, (6, 2))
        for idx in range(2):
            vec = vectors[:, idx]
            self.assertAlmostEqual(np.linalg.norm(vec), 1.0)
            lam = np.vdot(vec, mat @ vec)
            self.assertLess(min(abs(lam - 0.1), abs(lam + 0.2)), 1e-8)
            self.assertLess(np.linalg.norm(mat @ vec - lam * vec), 1e-8)
    # test_eigenvectors_inside()

    def test_eigenvectors_none_inside(self):
        """
        An empty selection gives an N x 0 matrix
        """
        vectors = eigtools.eigenvectors_inside(np.diag([5.0, 6.0]),
                                               Contour(0.0, 1.0))
        self.assertEqual(vectors.shape, (2, 0))
    # test_eigenvectors_none_inside()
# TestSpectrumTools

class TestConditioning(unittest.TestCase):
    """
    Singular values and condition numbers
    """
    def test_singular_values(self):
        """
        One-sided Jacobi agrees with the LAPACK SVD, wide and tall
        """
        rng = np.random.default_rng(11)
        mat = rng.standard_normal((12, 7)) + 1j * rng.standard_normal(
            (12, 7))
        expected = np.linalg.svd(mat, compute_uv=False)
        np.testing.assert_allclose(eigtools.singular_values(mat), expected,
                                   rtol=1e-12)
        np.testing.assert_allclose(eigtools.singular_values(mat.T),
                                   expected, rtol=1e-12)
    # test_singular_values()

    def test_cond2(self):
        """
        Condition numbers, infinite for a singular matrix
        """
        self.assertAlmostEqual(eigtools.cond2(np.diag([4.0, 2.0, 0.5])),
                               8.0)
        self.assertEqual(eigtools.cond2(np.diag([1.0, 0.0])),
                         float("inf"))
    # test_cond2()

    def test_eigenvector_condition(self):
        """
        The trailing block of the QR factor is measured separately
        """
        vectors = np.array([[1.0, 1.0, 0.0],
                            [0.0, 1.0, 0.0],
                            [0.0, 0.0, 1.0]])
        result = eigtools.eigenvector_condition(vectors, split=1)
        self.assertAlmostEqual(result["kappa_v"],
                               np.linalg.cond(vectors))
        self.assertAlmostEqual(result["kappa_r22"], 1.0)
        self.assertIsNone(
            eigtools.eigenvector_condition(vectors)["kappa_r22"])
    # test_eigenvector_condition()
# TestConditioning

class TestBounds(unittest.TestCase):
    """
    Ellipse based convergence factors
    """
    def test_ellipse(self):
        """
        Validation and origin exclusion
        """
        self.assertRaises(ValueError, eigtools.Ellipse, 1.0, -1.0, 0.5)
        self.assertTrue(eigtools.Ellipse(2.0, 1.0, 1.5).excludes_origin())
        self.assertFalse(eigtools.Ellipse(1.0, 0.5, 1.0).excludes_origin())
    # test_ellipse()

    def test_delta(self):
        """
        Degenerate disc and the a < d case with a complex square root
        """
        self.assertAlmostEqual(
            eigtools.gmres_bound_delta(eigtools.Ellipse(4.0, 0.0, 1.0)),
            0.25)
        self.assertAlmostEqual(
            eigtools.gmres_bound_delta(eigtools.Ellipse(2.0, 1.0, 0.5)),
            1.0 / (2.0 + np.sqrt(3.0)))
    # test_delta()

    def test_chebyshev_ratio(self):
        """
        The ratio equals the direct Chebyshev evaluation and tends to
        delta per step
        """
        ellipse = eigtools.Ellipse(2.0, 1.0, 1.5)
        for degree in (0, 1, 5, 10):
            coefs = [0.0] * degree + [1.0]
            expected = abs(np.polynomial.chebyshev.chebval(1.5, coefs) /
                           np.polynomial.chebyshev.chebval(2.0, coefs))
            self.assertAlmostEqual(
                eigtools.chebyshev_ratio(ellipse, degree) / expected, 1.0,
                places=10)
        delta = eigtools.gmres_bound_delta(ellipse)
        self.assertAlmostEqual(
            eigtools.chebyshev_ratio(ellipse, 400) ** (1 / 400), delta,
            places=6)
        disc = eigtools.Ellipse(4.0, 0.0, 1.0)
        self.assertAlmostEqual(eigtools.chebyshev_ratio(disc, 3), 1 / 64)
    # test_chebyshev_ratio()
# TestBounds
