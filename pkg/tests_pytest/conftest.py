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
Shared fixtures and the gate of the slow acceptance suites
"""

#
# IMPORTS
#
import os
import pytest

#
# CONSTANTS AND DEFINITIONS
#
SLOW_ENV_VAR = 'SPECDEFL_SLOW'
BCSSTM27_ENV_VAR = 'SPECDEFL_BCSSTM27'
MAHINDAS_ENV_VAR = 'SPECDEFL_MAHINDAS'

#
# CODE
#
def pytest_configure(config):
    """Register the slow marker"""
    config.addinivalue_line(
        'markers', 'slow: full scale runs, enabled by {}=1'.format(
            SLOW_ENV_VAR))


def pytest_collection_modifyitems(config, items):
    """Skip slow tests unless explicitly enabled"""
    if os.environ.get(SLOW_ENV_VAR) == '1':
        return
    skip_slow = pytest.mark.skip(
        reason='set {}=1 to run'.format(SLOW_ENV_VAR))
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


def _matrix_file(env_var):
    """Path of a user supplied Matrix Market file, skip when absent"""
    path = os.environ.get(env_var)
    if not path or not os.path.isfile(path):
        pytest.skip('{} does not point to a .mtx file'.format(env_var))
    return path


@pytest.fixture
def bcsstm27_file():
    """Matrix Market file of bcsstm27"""
    return _matrix_file(BCSSTM27_ENV_VAR)


@pytest.fixture
def mahindas_file():
    """Matrix Market file of mahindas"""
    return _matrix_file(MAHINDAS_ENV_VAR)
