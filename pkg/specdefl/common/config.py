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
Loading of flat key-value configuration files
"""

#
# IMPORTS
#
from specdefl.common.logger import get_logger

import os
import yaml

#
# CONSTANTS AND DEFINITIONS
#
# environment variable pointing to a default configuration file
CONFIG_ENV_VAR = 'SPECDEFL_CFG'

#
# CODE
#
def load_config_file(file_path=None):
    """
    Read a flat key-value configuration file. Keys are the kebab-case names
    of the command line flags, e.g.:

        computation: 4
        problem: convdiff
        n: 99
        solver: gmres

    Args:
        file_path (str): path to the file, when None the file named by the
                         SPECDEFL_CFG environment variable is used (if any)

    Returns:
        dict: the key-value pairs, empty when no file is available

    Raises:
        ValueError: if the file content is not a flat mapping
    """
    logger = get_logger(__name__)

    if file_path is None:
        file_path = os.environ.get(CONFIG_ENV_VAR)
        # env variable set to an empty file is a valid "no config" case
        if not file_path:
            return {}

    logger.debug('loading configuration from %s', file_path)
    with open(file_path, 'r') as config_fd:
        content = yaml.safe_load(config_fd)

    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ValueError(
            'Configuration file {} must contain a key-value mapping'.format(
                file_path))
    for key, value in content.items():
        if isinstance(value, (dict, list)):
            raise ValueError(
                "Configuration key '{}' must have a scalar value".format(key))

    return {str(key): value for key, value in content.items()}
# load_config_file()

def merge_config(file_values, flag_values):
    """
    Overlay command line values on top of file values. Flags that were not
    given on the command line (value None) do not override anything.

    Args:
        file_values (dict): values read from the config file
        flag_values (dict): values parsed from the command line

    Returns:
        dict: merged parameters
    """
    merged = dict(file_values)
    for key, value in flag_values.items():
        if value is not None:
            merged[key] = value
    return merged
# merge_config()
