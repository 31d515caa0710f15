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
Defines the exceptions used by the krylov package
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
class SolverError(SpecdeflError):
    """
    Invalid solver setup, e.g. unknown solver type or an operator lacking
    the adjoint action MBiCG needs.
    """
# SolverError

class OperatorNaNError(SolverError):
    """
    The operator returned NaN or Inf during the iteration.
    """
    def __init__(self, msg, iteration):
        """
        Store the iteration where the bad value showed up.

        Args:
            msg (str): exception's error message
            iteration (int): iteration number
        """
        super().__init__(msg)
        self.iteration = iteration
    # __init__()
# OperatorNaNError
