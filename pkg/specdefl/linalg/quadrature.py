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
Legendre-Gauss nodes and weights on [-1, 1]
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.linalg.exceptions import ConvergenceError

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
DEFAULT_ORDER = 16
MAX_NEWTON_ITERATIONS = 100
NEWTON_TOL = 1e-15

#
# CODE
#
@dataclass(frozen=True)
class QuadratureRule:
    """
    Nodes (strictly increasing, symmetric about 0) and positive weights of
    a q-point rule.
    """
    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, values):
        """
        Apply the rule to sampled values.

        Args:
            values (array_like): f(nodes)

        Returns:
            float or complex: sum of w_k f(x_k)
        """
        return np.dot(self.weights, values)
    # integrate()
# QuadratureRule

def _legendre(order, x_val):
    """
    Evaluate P_q and its derivative by the three term recurrence.

    Args:
        order (int): polynomial degree q >= 1
        x_val (numpy.ndarray): evaluation points inside (-1, 1)

    Returns:
        tuple: (P_q(x), P_q'(x))
    """
    p_prev = np.ones_like(x_val)
    p_cur = x_val.copy()
    for degree in range(2, order + 1):
        p_prev, p_cur = p_cur, (
            (2 * degree - 1) * x_val * p_cur - (degree - 1) * p_prev) / degree
    deriv = order * (x_val * p_cur - p_prev) / (x_val * x_val - 1.0)
    return p_cur, deriv
# _legendre()

def legendre_gauss(order=DEFAULT_ORDER):
    """
    Compute the q-point Legendre-Gauss rule. Only the non-negative roots are
    found by Newton iteration, the others are mirrored so the rule is
    symmetric exactly.

    Args:
        order (int): number of nodes q >= 1

    Returns:
        QuadratureRule: the rule

    Raises:
        ValueError: if order < 1
        ConvergenceError: if Newton does not converge in 100 steps
    """
    if int(order) != order or order < 1:
        raise ValueError('quadrature order must be >= 1, got {}'.format(
            order))
    order = int(order)

    half = (order + 1) // 2
    k_idx = np.arange(1, half + 1)
    # descending positive roots, k = 1 is the largest
    roots = np.cos(np.pi * (k_idx - 0.25) / (order + 0.5))
    for _ in range(MAX_NEWTON_ITERATIONS):
        p_val, p_der = _legendre(order, roots)
        step = p_val / p_der
        roots = roots - step
        # large q: |P_q| stalls at rounding level, a vanishing step is enough
        if (np.max(np.abs(p_val)) <= NEWTON_TOL or
                np.max(np.abs(step)) <= 2 * np.finfo(float).eps):
            break
    else:
        raise ConvergenceError(
            'Newton iteration for Legendre roots did not converge '
            '(q={})'.format(order), MAX_NEWTON_ITERATIONS)

    _, p_der = _legendre(order, roots)
    weights = 2.0 / ((1.0 - roots * roots) * p_der * p_der)

    # odd order: the middle root is exactly zero
    if order % 2 == 1:
        roots[-1] = 0.0
        _, p_der = _legendre(order, np.zeros(1))
        weights[-1] = 2.0 / (p_der[0] * p_der[0])

    if order % 2 == 1:
        nodes = np.concatenate([-roots[:-1], roots[::-1]])
        wts = np.concatenate([weights[:-1], weights[::-1]])
    else:
        nodes = np.concatenate([-roots, roots[::-1]])
        wts = np.concatenate([weights, weights[::-1]])

    nodes.setflags(write=False)
    wts.setflags(write=False)
    return QuadratureRule(order, nodes, wts)
# legendre_gauss()

@dataclass(frozen=True)
class Contour:
    """
    Circle D(center, radius) traversed once, discretized by a q-point
    Legendre-Gauss rule in the angle parameter theta in [-1, 1], where
    z(theta) = center + radius * exp(i pi theta).
    """
    center: complex
    radius: float
    order: int = DEFAULT_ORDER

    # eigenvalues this close to the circle count as inside
    BOUNDARY_TOL = 1e-12

    def __post_init__(self):
        """
        Validate and normalize field types

        Raises:
            ValueError: if radius <= 0 or order < 1
        """
        if not self.radius > 0:
            raise ValueError('contour radius must be positive, got {}'.format(
                self.radius))
        if int(self.order) != self.order or self.order < 1:
            raise ValueError('quadrature order must be >= 1, got {}'.format(
                self.order))
        object.__setattr__(self, 'center', complex(self.center))
        object.__setattr__(self, 'radius', float(self.radius))
        object.__setattr__(self, 'order', int(self.order))
    # __post_init__()

    def contains(self, points):
        """
        Interior test |z - c| < r, boundary points (within BOUNDARY_TOL)
        included.

        Args:
            points (array_like): complex points

        Returns:
            numpy.ndarray: boolean mask
        """
        dist = np.abs(np.asarray(points, dtype=complex) - self.center)
        return dist <= self.radius + self.BOUNDARY_TOL
    # contains()

    def nodes(self):
        """
        Shifts and weights of the discretized contour integral

            (r/2) sum_k w_k e^{i pi theta_k} ((c + r e^{i pi theta_k}) I - A)^{-1}

        Returns:
            tuple: (shifts sigma_k, factors (r/2) w_k e^{i pi theta_k}), both
                   complex arrays ordered by ascending theta_k
        """
        rule = legendre_gauss(self.order)
        phase = np.exp(1j * np.pi * rule.nodes)
        shifts = self.center + self.radius * phase
        factors = 0.5 * self.radius * rule.weights * phase
        return shifts, factors
    # nodes()
# Contour
