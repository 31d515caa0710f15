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
Defines the exceptions used by the linalg package
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
class DimensionError(SpecdeflError, ValueError):
    """
    Operand shapes do not agree.
    """
# DimensionError

class NonFiniteError(SpecdeflError, ValueError):
    """
    NaN or Inf found where only finite numbers are admitted.
    """
# NonFiniteError

class ConvergenceError(SpecdeflError):
    """
    An inner iteration (Newton, QR sweeps) did not converge.
    """
    def __init__(self, msg, iterations=None):
        """
        Store the number of iterations performed.

        Args:
            msg (str): exception's error message
            iterations (int): iterations performed before giving up
        """
        super().__init__(msg)
        self.iterations = iterations
    # __init__()
# ConvergenceError

class MatrixMarketError(SpecdeflError):
    """
    Malformed or unsupported Matrix Market content.
    """
    def __init__(self, msg, path=None):
        """
        Store the path of the offending file.

        Args:
            msg (str): exception's error message
            path (str): file being read or written
        """
        super().__init__(msg)
        self.path = path
    # __init__()
# MatrixMarketError
