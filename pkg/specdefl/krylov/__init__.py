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
Factory to expose the Krylov solvers to library consumers
"""

#
# IMPORTS
#
from specdefl.krylov.base import SolveReport, SolverConfig
from specdefl.krylov.exceptions import SolverError
from specdefl.krylov.gmres import Gmres
from specdefl.krylov.mbicg import Mbicg

#
# CONSTANTS AND DEFINITIONS
#
SUPPORTED_SOLVERS = {
    Gmres.SOLVER_ID: Gmres,
    Mbicg.SOLVER_ID: Mbicg,
}

#
# CODE
#
class Solver:
    """
    This is the solver class to be consumed by the user. It acts as a
    factory by determining the concrete class from the solver type and as a
    proxy by forwarding the calls to the instantiated object.
    """

    def __init__(self, solver_type, *args, **kwargs):
        """
        Constructor

        Args:
            solver_type (str): one of the keys of SUPPORTED_SOLVERS
            args (tuple): positional arguments for the solver constructor
            kwargs (dict): keyword arguments for the solver constructor

        Raises:
            SolverError: in case solver_type is not supported
        """
        solver_cls = SUPPORTED_SOLVERS.get(solver_type)
        if solver_cls is None:
            raise SolverError(
                'Solver type {} is not supported'.format(solver_type))

        self.__solver = solver_cls(*args, **kwargs)
    # __init__()

    def __getattr__(self, attr):
        """
        Forward attribute access to the solver object.

        Args:
            attr (str): attribute name

        Returns:
            any: the attribute from the solver object

        Raises:
            AttributeError: if the solver object lacks the attribute
        """
        return getattr(self.__solver, attr)
    # __getattr__()
# Solver

def solve(solver_type, operator, rhs, config=None):
    """
    Shortcut for Solver(solver_type, config).solve(operator, rhs).

    Args:
        solver_type (str): gmres or mbicg
        operator (matrix or LinearOperator): A
        rhs (array_like): b
        config (SolverConfig): stopping criteria

    Returns:
        SolveReport: solution and convergence data
    """
    return Solver(solver_type, config).solve(operator, rhs)
# solve()
