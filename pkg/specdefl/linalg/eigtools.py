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
Dense eigen diagnostics: eigenvalues (Hessenberg reduction plus single
shift complex QR), eigenvectors of the eigenvalues enclosed by a contour
(inverse iteration), 2-norm condition numbers (one-sided Jacobi SVD),
interior eigenvalue counting and the Chebyshev convergence bound factors
of GMRES for spectra enclosed in an ellipse.

Everything here is O(n^3) dense work meant for problems up to a couple of
thousand unknowns.
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.common.logger import get_logger
from specdefl.linalg.exceptions import ConvergenceError, DimensionError
from specdefl.linalg.numcore import as_dense

import cmath
import warnings

import numpy as np
import scipy.linalg

#
# CONSTANTS AND DEFINITIONS
#
# QR sweeps allowed per eigenvalue
QR_ITERATIONS_PER_EIGENVALUE = 30
# an exceptional shift is used every this many sweeps on the same block
EXCEPTIONAL_SHIFT_PERIOD = 10
INVERSE_ITERATION_STEPS = 20
INVERSE_ITERATION_TOL = 1e-12
JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 60

#
# CODE
#
@dataclass(frozen=True)
class Ellipse:
    """
    Ellipse E(c, d, a) with center c on the real axis, focal distance d and
    semi-major axis a.
    """
    c: float
    d: float
    a: float

    def __post_init__(self):
        """
        Raises:
            ValueError: if a < 0 or d < 0
        """
        if self.a < 0 or self.d < 0:
            raise ValueError('ellipse needs a >= 0 and d >= 0')
    # __post_init__()

    def excludes_origin(self):
        """
        Whether the origin lies outside the ellipse (real-axis layout), which
        the convergence bound requires.

        Returns:
            bool: c - a > 0
        """
        return self.c - self.a > 0
    # excludes_origin()
# Ellipse

@dataclass(frozen=True)
class SpectrumReport:
    """
    Eigenvalues together with the count inside a contour and the distance
    of the spectrum to the origin
    """
    eigenvalues: np.ndarray
    inside_count: int
    min_distance_to_origin: float
# SpectrumReport

def _householder_hessenberg(mat):
    """
    Reduce a square matrix to upper Hessenberg form in place with complex
    Householder reflectors.

    Args:
        mat (numpy.ndarray): complex square matrix, overwritten

    Returns:
        numpy.ndarray: the Hessenberg matrix (same object)
    """
    size = mat.shape[0]
    for col in range(size - 2):
        x_vec = mat[col + 1:, col].copy()
        x_norm = np.linalg.norm(x_vec)
        if x_norm == 0.0:
            continue
        phase = x_vec[0] / abs(x_vec[0]) if x_vec[0] != 0 else 1.0
        alpha = -phase * x_norm
        x_vec[0] -= alpha
        v_norm = np.linalg.norm(x_vec)
        if v_norm == 0.0:
            continue
        v_vec = x_vec / v_norm
        # H <- (I - 2vv^H) H (I - 2vv^H)
        block = mat[col + 1:, col:]
        block -= 2.0 * np.outer(v_vec, v_vec.conj() @ block)
        block = mat[:, col + 1:]
        block -= 2.0 * np.outer(block @ v_vec, v_vec.conj())
        mat[col + 2:, col] = 0.0
    return mat
# _householder_hessenberg()

def _givens(a_val, b_val):
    """
    Complex rotation [[c, s], [-conj(s), c]] mapping (a, b) to (r, 0).

    Args:
        a_val (complex): top entry
        b_val (complex): entry to annihilate

    Returns:
        tuple: (c, s) with c real
    """
    abs_a = abs(a_val)
    if abs_a == 0.0:
        return 0.0, 1.0
    denom = np.hypot(abs_a, abs(b_val))
    return abs_a / denom, (a_val / abs_a) * b_val.conjugate() / denom
# _givens()

def _wilkinson_shift(block):
    """
    Eigenvalue of the trailing 2x2 block closer to its last diagonal entry.

    Args:
        block (numpy.ndarray): active Hessenberg block

    Returns:
        complex: shift
    """
    a_val, b_val = block[-2, -2], block[-2, -1]
    c_val, d_val = block[-1, -2], block[-1, -1]
    half = 0.5 * (a_val - d_val)
    disc = cmath.sqrt(half * half + b_val * c_val)
    denom = half + disc if abs(half + disc) >= abs(half - disc) \
        else half - disc
    if denom == 0:
        return d_val
    return d_val - b_val * c_val / denom
# _wilkinson_shift()

def _qr_sweep(block, shift):
    """
    One explicitly shifted QR step H - mu I = QR, H <- RQ + mu I on the
    active block, in place.

    Args:
        block (numpy.ndarray): active Hessenberg block (a view)
        shift (complex): mu
    """
    size = block.shape[0]
    diag = np.arange(size)
    block[diag, diag] -= shift
    rotations = []
    for k in range(size - 1):
        c_val, s_val = _givens(block[k, k], block[k + 1, k])
        row_k = block[k, k:].copy()
        row_k1 = block[k + 1, k:]
        block[k, k:] = c_val * row_k + s_val * row_k1
        block[k + 1, k:] = -s_val.conjugate() * row_k + c_val * row_k1
        rotations.append((c_val, s_val))
    for k, (c_val, s_val) in enumerate(rotations):
        col_k = block[:k + 2, k].copy()
        col_k1 = block[:k + 2, k + 1]
        block[:k + 2, k] = c_val * col_k + s_val.conjugate() * col_k1
        block[:k + 2, k + 1] = -s_val * col_k + c_val * col_k1
    block[diag, diag] += shift
# _qr_sweep()

def dense_eigenvalues(mat):
    """
    All eigenvalues of a dense matrix: balancing, Householder Hessenberg
    reduction and single shift (Wilkinson) complex QR with deflation.

    Args:
        mat (array_like or sparse matrix): square matrix

    Returns:
        numpy.ndarray: complex eigenvalues, sorted by real then imaginary part

    Raises:
        DimensionError: if the matrix is not square
        ConvergenceError: if QR needs more than 30n sweeps
    """
    logger = get_logger(__name__)
    hess = as_dense(mat)
    size = hess.shape[0]
    if hess.shape != (size, size):
        raise DimensionError('eigenvalues need a square matrix, got {}'.format(
            hess.shape))
    if size == 0:
        return np.empty(0, dtype=complex)

    hess, _ = scipy.linalg.matrix_balance(hess, permute=True, scale=True)
    hess = np.array(hess, dtype=complex)
    _householder_hessenberg(hess)
    scale = np.linalg.norm(hess, 1) or 1.0
    eps = np.finfo(float).eps

    eigs = np.empty(size, dtype=complex)
    high = size - 1
    sweeps = 0
    block_sweeps = 0
    max_sweeps = QR_ITERATIONS_PER_EIGENVALUE * size
    while high >= 0:
        # locate the active unreduced block [low, high]
        low = high
        while low > 0:
            ref = abs(hess[low - 1, low - 1]) + abs(hess[low, low])
            if ref == 0.0:
                ref = scale
            if abs(hess[low, low - 1]) <= eps * ref:
                hess[low, low - 1] = 0.0
                break
            low -= 1

        if low == high:
            eigs[high] = hess[high, high]
            high -= 1
            block_sweeps = 0
            continue

        if sweeps >= max_sweeps:
            raise ConvergenceError(
                'QR iteration did not converge after {} sweeps'.format(
                    sweeps), sweeps)
        sweeps += 1
        block_sweeps += 1

        block = hess[low:high + 1, low:high + 1]
        if block_sweeps % EXCEPTIONAL_SHIFT_PERIOD == 0:
            shift = block[-1, -1] + 0.75 * abs(block[-1, -2])
        else:
            shift = _wilkinson_shift(block)
        _qr_sweep(block, shift)

    logger.debug('dense eigenvalues: n=%d, %d QR sweeps', size, sweeps)
    return np.sort_complex(eigs)
# dense_eigenvalues()

def count_inside(eigenvalues, contour):
    """
    Number of eigenvalues enclosed by the contour (boundary included within
    the contour's tolerance).

    Args:
        eigenvalues (array_like): complex eigenvalues
        contour (Contour): circle

    Returns:
        int: count
    """
    return int(np.count_nonzero(contour.contains(eigenvalues)))
# count_inside()

def spectrum_report(eigenvalues, contour):
    """
    Summarize a spectrum against a contour.

    Args:
        eigenvalues (array_like): complex eigenvalues
        contour (Contour): circle

    Returns:
        SpectrumReport: the summary
    """
    eigs = np.asarray(eigenvalues, dtype=complex)
    return SpectrumReport(eigs, count_inside(eigs, contour),
                          float(np.min(np.abs(eigs))) if eigs.size else 0.0)
# spectrum_report()

def write_spectrum_csv(path, eigenvalues):
    """
    Dump a spectrum as "re,im" lines for external plotting.

    Args:
        path (str): target file
        eigenvalues (array_like): complex eigenvalues
    """
    eigs = np.asarray(eigenvalues, dtype=complex)
    np.savetxt(path, np.column_stack([eigs.real, eigs.imag]),
               delimiter=',', header='re,im', comments='', fmt='%.17g')
# write_spectrum_csv()

def eigenvectors_inside(mat, contour, eigenvalues=None, seed=0):
    """
    Unit eigenvectors of the eigenvalues inside the contour, by inverse
    iteration on A - (lambda + eps) I from a seeded random start.

    Args:
        mat (array_like or sparse matrix): square matrix
        contour (Contour): circle selecting the eigenvalues
        eigenvalues (array_like): precomputed eigenvalues of mat, computed
                                  here when None
        seed (int): random seed of the starting vectors

    Returns:
        numpy.ndarray: N x s column-major matrix, one column per eigenvalue
    """
    logger = get_logger(__name__)
    dense = as_dense(mat)
    size = dense.shape[0]
    if eigenvalues is None:
        eigenvalues = dense_eigenvalues(dense)
    eigs = np.asarray(eigenvalues, dtype=complex)
    selected = eigs[contour.contains(eigs)]

    norm_a = np.linalg.norm(dense, 1) or 1.0
    perturbation = 1e3 * np.finfo(float).eps * norm_a
    rng = np.random.default_rng(seed)
    columns = np.zeros((size, selected.size), dtype=complex, order='F')
    eye = np.eye(size, dtype=complex)
    for idx, lam in enumerate(selected):
        with warnings.catch_warnings():
            # the shifted matrix is meant to be nearly singular
            warnings.simplefilter('ignore', scipy.linalg.LinAlgWarning)
            factor = scipy.linalg.lu_factor(
                dense - (lam + perturbation) * eye, check_finite=False)
        vec = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        vec /= np.linalg.norm(vec)
        best_vec, best_res = vec, np.inf
        for _ in range(INVERSE_ITERATION_STEPS):
            vec = scipy.linalg.lu_solve(factor, vec, check_finite=False)
            vec_norm = np.linalg.norm(vec)
            if not np.isfinite(vec_norm) or vec_norm == 0.0:
                break
            vec /= vec_norm
            res = np.linalg.norm(dense @ vec - lam * vec) / norm_a
            if res < best_res:
                best_vec, best_res = vec.copy(), res
            if res <= INVERSE_ITERATION_TOL:
                break
        if best_res > INVERSE_ITERATION_TOL:
            logger.warning(
                'inverse iteration stagnated for eigenvalue %s: relative '
                'residual %.2e', lam, best_res)
        columns[:, idx] = best_vec
    return columns
# eigenvectors_inside()

def singular_values(mat):
    """
    Singular values by one-sided (Hestenes) Jacobi with cyclic sweeps.

    Args:
        mat (array_like): matrix, any shape

    Returns:
        numpy.ndarray: singular values in descending order

    Raises:
        ConvergenceError: if the sweeps do not converge
    """
    work = as_dense(mat)
    if work.shape[0] < work.shape[1]:
        work = np.asfortranarray(work.conj().T)
    cols = work.shape[1]

    for _ in range(JACOBI_MAX_SWEEPS):
        rotated = False
        for i in range(cols - 1):
            col_i = work[:, i]
            for j in range(i + 1, cols):
                col_j = work[:, j]
                alpha = np.vdot(col_i, col_i).real
                beta = np.vdot(col_j, col_j).real
                gamma = np.vdot(col_i, col_j)
                abs_gamma = abs(gamma)
                if abs_gamma <= JACOBI_TOL * np.sqrt(alpha * beta) or \
                        abs_gamma == 0.0:
                    continue
                rotated = True
                # remove the phase so the pair rotation is real
                col_j *= np.conj(gamma) / abs_gamma
                zeta = (beta - alpha) / (2.0 * abs_gamma)
                tan = np.copysign(1.0, zeta) / (
                    abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                cos = 1.0 / np.sqrt(1.0 + tan * tan)
                sin = cos * tan
                new_i = cos * col_i - sin * col_j
                col_j[:] = sin * col_i + cos * col_j
                col_i[:] = new_i
        if not rotated:
            break
    else:
        raise ConvergenceError('one-sided Jacobi did not converge',
                               JACOBI_MAX_SWEEPS)
    return np.sort(np.linalg.norm(work, axis=0))[::-1]
# singular_values()

def cond2(mat):
    """
    2-norm condition number sigma_max / sigma_min.

    Args:
        mat (array_like): nonzero matrix

    Returns:
        float: condition number, inf when sigma_min is zero
    """
    sigma = singular_values(mat)
    if sigma.size == 0 or sigma[-1] == 0.0:
        return float('inf')
    return float(sigma[0] / sigma[-1])
# cond2()

def eigenvector_condition(vectors, split=None):
    """
    Condition numbers entering the GMRES bounds: kappa_2(V) of the
    eigenvector matrix and, with a split s, kappa_2(R_22) of the trailing
    block of the QR factor of V.

    Args:
        vectors (array_like): eigenvector matrix V
        split (int): number s of leading (deflated) columns

    Returns:
        dict: {'kappa_v': float, 'kappa_r22': float or None}
    """
    dense = as_dense(vectors)
    result = {'kappa_v': cond2(dense), 'kappa_r22': None}
    if split is not None and 0 <= split < dense.shape[1]:
        _, r_fac = np.linalg.qr(dense)
        result['kappa_r22'] = cond2(r_fac[split:, split:])
    return result
# eigenvector_condition()

def gmres_bound_delta(ellipse):
    """
    Asymptotic convergence factor of GMRES for a spectrum in the ellipse

        delta = (a + sqrt(a^2 - d^2)) / (c + sqrt(c^2 - d^2))

    with principal complex square roots (so a < d is allowed).

    Args:
        ellipse (Ellipse): E(c, d, a)

    Returns:
        float: |delta|

    Raises:
        ValueError: if the denominator vanishes
    """
    num = ellipse.a + np.emath.sqrt(ellipse.a ** 2 - ellipse.d ** 2)
    den = ellipse.c + np.emath.sqrt(ellipse.c ** 2 - ellipse.d ** 2)
    if den == 0:
        raise ValueError('c + sqrt(c^2 - d^2) vanishes for {}'.format(
            ellipse))
    return float(abs(num / den))
# gmres_bound_delta()

def _chebyshev_root(z_val):
    """
    The root w of w + 1/w = 2z with |w| >= 1.
    """
    root = z_val + np.emath.sqrt(z_val * z_val - 1.0)
    if abs(root) < 1.0:
        root = 1.0 / root
    return complex(root)
# _chebyshev_root()

def chebyshev_ratio(ellipse, degree):
    """
    Exact factor |C_j(a/d)| / |C_j(c/d)| (C_j the Chebyshev polynomial of
    degree j) bounding the GMRES residual reduction of a normal matrix
    whose spectrum lies in the ellipse. Evaluated as
    delta^j |1 + w_a^(-2j)| / |1 + w_c^(-2j)| to avoid overflow.

    Args:
        ellipse (Ellipse): E(c, d, a), with c - a > 0
        degree (int): j >= 0

    Returns:
        float: the ratio
    """
    if ellipse.d == 0.0:
        return float((ellipse.a / ellipse.c) ** degree)
    w_a = _chebyshev_root(ellipse.a / ellipse.d)
    w_c = _chebyshev_root(ellipse.c / ellipse.d)
    delta = abs(w_a) / abs(w_c)
    corr_a = abs(1.0 + w_a ** (-2 * degree))
    corr_c = abs(1.0 + w_c ** (-2 * degree))
    return float(delta ** degree * corr_a / corr_c)
# chebyshev_ratio()
