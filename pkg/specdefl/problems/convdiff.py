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
Two dimensional steady convection-diffusion test problem

    -u_xx - u_yy - Re (p u_x - q u_y) = f  on [0, 1]^2

with Dirichlet boundary conditions, discretized by 5-point central
differences on a uniform n x n interior grid. Rows are scaled by h^2.
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.linalg.numcore import as_sparse, spmv

import numpy as np
import scipy.sparse as sps

#
# CONSTANTS AND DEFINITIONS
#
DEFAULT_RE = 8000.0

#
# CODE
#
def coefficient_p(x_val, y_val):
    """
    p(x, y) = -sin(x) cos(pi y)
    """
    return -np.sin(x_val) * np.cos(np.pi * y_val)
# coefficient_p()

def coefficient_q(x_val, y_val):
    """
    q(x, y) = cos(pi x) sin(y)
    """
    return np.cos(np.pi * x_val) * np.sin(y_val)
# coefficient_q()

def exact_solution(x_val, y_val):
    """
    Manufactured solution u = sin(4x + 6y)
    """
    return np.sin(4.0 * x_val + 6.0 * y_val)
# exact_solution()

@dataclass(frozen=True)
class ConvDiffSpec:
    """
    Grid size n (h = 1/(n+1), N = n^2), Reynolds number and the convection
    coefficient functions.
    """
    n: int
    re: float = DEFAULT_RE
    p: object = coefficient_p
    q: object = coefficient_q

    def __post_init__(self):
        """
        Raises:
            ValueError: if n < 1
        """
        if int(self.n) != self.n or self.n < 1:
            raise ValueError('grid size n must be >= 1, got {}'.format(
                self.n))
    # __post_init__()

    @property
    def h(self):
        """
        Mesh width
        """
        return 1.0 / (self.n + 1)
    # h

    @property
    def size(self):
        """
        Number of unknowns N = n^2
        """
        return self.n * self.n
    # size

    def grid(self):
        """
        Coordinates of the interior nodes in unknown order (x fastest).

        Returns:
            tuple: (x, y) flat arrays of length N
        """
        coords = self.h * np.arange(1, self.n + 1)
        y_grid, x_grid = np.meshgrid(coords, coords, indexing='ij')
        return x_grid.ravel(), y_grid.ravel()
    # grid()

    def stencil(self):
        """
        The five stencil weights of every interior node.

        Returns:
            dict: center, east, west, north, south arrays of length N
        """
        x_val, y_val = self.grid()
        half = 0.5 * self.re * self.h
        p_val = self.p(x_val, y_val) * np.ones_like(x_val)
        q_val = self.q(x_val, y_val) * np.ones_like(x_val)
        return {
            'center': np.full(x_val.size, 4.0),
            'east': -1.0 - half * p_val,
            'west': -1.0 + half * p_val,
            'north': -1.0 + half * q_val,
            'south': -1.0 - half * q_val,
        }
    # stencil()
# ConvDiffSpec

def convdiff_assemble(spec):
    """
    Assemble the h^2-scaled 5-point matrix. Boundary neighbors are dropped
    (their values belong to the right hand side).

    Args:
        spec (ConvDiffSpec): problem definition

    Returns:
        scipy.sparse.csr_matrix: N x N complex matrix with 5n^2 - 4n
                                 stored entries
    """
    size_n = spec.n
    weights = spec.stencil()
    col_i, row_j = np.meshgrid(np.arange(size_n), np.arange(size_n))
    col_i = col_i.ravel()
    row_j = row_j.ravel()
    index = row_j * size_n + col_i

    rows = [index]
    cols = [index]
    vals = [weights['center']]
    neighbors = (
        ('east', col_i < size_n - 1, 1),
        ('west', col_i > 0, -1),
        ('north', row_j < size_n - 1, size_n),
        ('south', row_j > 0, -size_n),
    )
    for name, mask, offset in neighbors:
        rows.append(index[mask])
        cols.append(index[mask] + offset)
        vals.append(weights[name][mask])

    mat = sps.coo_matrix(
        (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
        shape=(spec.size, spec.size))
    return as_sparse(mat, what='convection-diffusion matrix')
# convdiff_assemble()

def rhs_ones(matrix):
    """
    b = A 1, whose exact solution is the all-ones vector.

    Args:
        matrix (sparse matrix or array_like): square A

    Returns:
        numpy.ndarray: b
    """
    return spmv(matrix, np.ones(matrix.shape[1]))
# rhs_ones()

def source_term(x_val, y_val, re=DEFAULT_RE, p_fn=coefficient_p,
                q_fn=coefficient_q):
    """
    Right hand side f matching the manufactured solution u = sin(4x + 6y):

        f = 52 sin(4x + 6y) - Re (4 p - 6 q) cos(4x + 6y)

    Args:
        x_val (array_like): x coordinates
        y_val (array_like): y coordinates
        re (float): Reynolds number
        p_fn (callable): coefficient p
        q_fn (callable): coefficient q

    Returns:
        numpy.ndarray: f values
    """
    phase = 4.0 * np.asarray(x_val) + 6.0 * np.asarray(y_val)
    return 52.0 * np.sin(phase) - re * (
        4.0 * p_fn(x_val, y_val) - 6.0 * q_fn(x_val, y_val)) * np.cos(phase)
# source_term()

def rhs_manufactured(spec):
    """
    Right hand side h^2 f plus the Dirichlet data of u = sin(4x + 6y) moved
    from the boundary neighbors.

    Args:
        spec (ConvDiffSpec): problem definition

    Returns:
        tuple: (b, exact solution on the interior nodes)
    """
    x_val, y_val = spec.grid()
    step = spec.h
    weights = spec.stencil()
    rhs = step * step * source_term(x_val, y_val, spec.re, spec.p, spec.q)
    boundary = (
        ('east', np.isclose(x_val + step, 1.0), step, 0.0),
        ('west', np.isclose(x_val - step, 0.0), -step, 0.0),
        ('north', np.isclose(y_val + step, 1.0), 0.0, step),
        ('south', np.isclose(y_val - step, 0.0), 0.0, -step),
    )
    for name, mask, d_x, d_y in boundary:
        rhs[mask] -= weights[name][mask] * exact_solution(
            x_val[mask] + d_x, y_val[mask] + d_y)
    return rhs.astype(complex), exact_solution(x_val, y_val).astype(complex)
# rhs_manufactured()
