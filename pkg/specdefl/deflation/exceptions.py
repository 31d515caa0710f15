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
Defines the exceptions used by the deflation package
"""

#
# IMPORTS
#
from specdefl.common.exceptions import SpecdeflError

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
class SingularDeflationError(SpecdeflError):
    """
    M = Z^H A Z is numerically singular, the columns of Z are (nearly)
    dependent.
    """
    def __init__(self, msg, pivots=None):
        """
        Store the pivot magnitudes of the failed factorization.

        Args:
            msg (str): exception's error message
            pivots (numpy.ndarray): |u_ii| of the LU factor of M
        """
        super().__init__(msg)
        self.pivots = pivots
    # __init__()
# SingularDeflationError

class ContourError(SpecdeflError):
    """
    The contour passes through the spectrum: every shifted system of a
    quadrature node failed.
    """
    def __init__(self, msg, node=None):
        """
        Store the failing quadrature node.

        Args:
            msg (str): exception's error message
            node (int): index of the quadrature node
        """
        super().__init__(msg)
        self.node = node
    # __init__()
# ContourError
