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
Experiment configuration: the eight computation presets and the validated
flat parameter dictionary (kebab-case keys, as the command line flags) they
are overridden with
"""

#
# IMPORTS
#
from dataclasses import asdict, dataclass
from specdefl.common.params_validators.utils import validate_params
from specdefl.krylov import SolverConfig
from specdefl.linalg.cge import CgeParams
from specdefl.linalg.quadrature import Contour

#
# CONSTANTS AND DEFINITIONS
#
# computation id -> pipeline kind
PIPELINES = {
    1: 'plain',
    2: 'eigenvectors',
    3: 'spectral',
    4: 'spectral',
    5: 'spectral-cge',
    6: 'spectral-cge',
    7: 'spectral',
    8: 'spectral',
}
# outer maxit as a multiple of N
OUTER_MAXIT_FACTOR = {1: 1000}
DEFAULT_OUTER_MAXIT_FACTOR = 10
INNER_MAXIT = {3: 500, 5: 500, 7: 500, 4: 1000, 6: 1000, 8: 1000}
RANDOM_INIT_COMPUTATIONS = (7, 8)
CGE_COMPUTATIONS = (5, 6)

# flag name -> ExperimentConfig field
PARAMETER_FIELDS = {
    'computation': 'computation',
    'problem': 'problem',
    'n': 'n',
    're': 're',
    'matrix': 'matrix',
    'center': 'center',
    'center-imag': 'center_imag',
    'radius': 'radius',
    'quad-order': 'quad_order',
    'm': 'm',
    'solver': 'solver',
    'inner-solver': 'inner_solver',
    'inner-tol': 'inner_tol',
    'inner-maxit': 'inner_maxit',
    'inner-init': 'inner_init',
    'outer-tol': 'outer_tol',
    'outer-maxit': 'outer_maxit',
    'restart': 'restart',
    'cge': 'cge',
    'cge-alpha': 'cge_alpha',
    'cge-tol': 'cge_tol',
    'seed': 'seed',
    'workers': 'workers',
    'eig-max-size': 'eig_max_size',
    'cond-budget': 'cond_budget',
}

#
# CODE
#
@dataclass(frozen=True)
class ExperimentConfig:
    """
    One computation of the experiment suite. outer_maxit None means the
    preset multiple of N, resolved once the problem is loaded.
    """
    computation: int = 1
    problem: str = 'convdiff'
    n: int = 99
    re: float = 8000.0
    matrix: str = None
    center: float = 0.0
    center_imag: float = 0.0
    radius: float = 0.5
    quad_order: int = 16
    m: int = 10
    solver: str = 'gmres'
    inner_solver: str = None
    inner_tol: float = 1e-15
    inner_maxit: int = 500
    inner_init: str = 'zero'
    outer_tol: float = 1e-7
    outer_maxit: int = None
    restart: int = None
    cge: bool = False
    cge_alpha: float = 1e-8
    cge_tol: float = 1e-2
    seed: int = 0
    workers: int = 1
    # dense eigen work (computation 2) is skipped above this order
    eig_max_size: int = 2000
    # condition numbers are skipped when N * m exceeds this
    cond_budget: int = 5000000

    @property
    def pipeline(self):
        """
        Pipeline kind of the computation
        """
        return PIPELINES[self.computation]
    # pipeline

    @property
    def contour(self):
        """
        Integration contour
        """
        return Contour(complex(self.center, self.center_imag), self.radius,
                       self.quad_order)
    # contour

    def outer_config(self, size):
        """
        Stopping criteria of the outer (deflated or plain) solve.

        Args:
            size (int): problem order N

        Returns:
            SolverConfig: outer configuration
        """
        maxit = self.outer_maxit
        if maxit is None:
            maxit = OUTER_MAXIT_FACTOR.get(
                self.computation, DEFAULT_OUTER_MAXIT_FACTOR) * size
        return SolverConfig(tol=self.outer_tol, maxit=maxit,
                            restart=self.restart)
    # outer_config()

    def inner_config(self):
        """
        Stopping criteria of the shifted solves.

        Returns:
            SolverConfig: inner configuration
        """
        return SolverConfig(tol=self.inner_tol, maxit=self.inner_maxit,
                            restart=self.restart,
                            initial_guess=self.inner_init, seed=self.seed)
    # inner_config()

    @property
    def inner_solver_type(self):
        """
        Solver of the shifted systems, the outer solver unless overridden
        """
        return self.inner_solver or self.solver
    # inner_solver_type

    def cge_params(self):
        """
        Returns:
            CgeParams: thresholds of the column selection
        """
        return CgeParams(self.cge_alpha, self.cge_tol)
    # cge_params()

    def to_parameters(self):
        """
        Flat parameter dictionary (kebab-case keys, unset values dropped),
        the inverse of build_config.

        Returns:
            dict: parameters
        """
        values = asdict(self)
        return {key: values[attr] for key, attr in PARAMETER_FIELDS.items()
                if values[attr] is not None}
    # to_parameters()
# ExperimentConfig

def preset_values(computation):
    """
    Values a computation id implies before user overrides.

    Args:
        computation (int): 1 to 8

    Returns:
        dict: ExperimentConfig field values
    """
    values = {'computation': computation}
    if computation in INNER_MAXIT:
        values['inner_maxit'] = INNER_MAXIT[computation]
    values['inner_init'] = 'random' if \
        computation in RANDOM_INIT_COMPUTATIONS else 'zero'
    values['cge'] = computation in CGE_COMPUTATIONS
    return values
# preset_values()

@validate_params
def build_config(parameters):
    """
    Build an ExperimentConfig from validated flat parameters: preset values
    of the computation first, explicit parameters on top.

    Args:
        parameters (dict): kebab-case keys, see the build_config schema

    Returns:
        ExperimentConfig: the configuration

    Raises:
        ValueError: if the parameters do not match the schema or are
                    inconsistent
    """
    values = preset_values(parameters.get('computation', 1))
    for key, value in parameters.items():
        values[PARAMETER_FIELDS[key]] = value
    config = ExperimentConfig(**values)

    if config.problem in ('mmfile', 'mmfile-ilu0') and not config.matrix:
        raise ValueError(
            "Problem '{}' needs the 'matrix' parameter".format(
                config.problem))
    if config.pipeline == 'spectral-cge' and not config.cge:
        raise ValueError('Computation {} requires cge'.format(
            config.computation))
    return config
# build_config()
