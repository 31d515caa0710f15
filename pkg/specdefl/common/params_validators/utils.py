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
Module for utility functions
"""

#
# IMPORTS
#
from functools import wraps
from specdefl.common.params_validators.jsonschema import \
    JsonschemaValidator

import inspect
import os
#
# CONSTANTS AND DEFINITIONS
#
ARGUMENT_TO_VALIDATE = "parameters"
SCHEMAS_BASE_DIR = os.path.dirname(os.path.realpath(__file__)) + "/schemas"
VALID_ACTIONS = ("build_config",)

#
# CODE
#

def schema_path(package_name, kind, name):
    """
    Location of a schema file in the schemas tree.

    Args:
        package_name (str): last component of the package, e.g. experiments
        kind (str): actions or entities
        name (str): schema name without extension

    Returns:
        str: absolute path to the schema
    """
    return os.path.join(SCHEMAS_BASE_DIR, package_name, kind, name + ".json")
# schema_path()

def validate_params(func, validated_argument=ARGUMENT_TO_VALIDATE):
    """
    A function decorator that validates the "parameters" argument of a
    function against the schema
    schemas/<package dir>/actions/<function name>.json.

    Usage:
        @validate_params
        def build_config(parameters):
            ...
    Returns:
        func: Decorated function.

    Raises:
        NameError: if the function name is not valid, and if the "parameters"
        argument is not found.
    """
    func_name = func.__name__

    if func_name not in VALID_ACTIONS:
        raise NameError("validate_params should only decorate functions "
                        "in {}".format(VALID_ACTIONS))
    func_params = list(inspect.signature(func).parameters.keys())
    try:
        parameters_index = func_params.index(validated_argument)
    except ValueError:
        raise NameError("Decorated function does not have correct argument "
                        "to validate: {}".format(validated_argument))

    func_dir_name = os.path.basename(os.path.dirname(inspect.getfile(func)))
    validator = JsonschemaValidator(
        schema_path(func_dir_name, "actions", func_name))

    @wraps(func)
    def validate(*params, **kwargs):
        """
        Inner function of the decorator
        """
        if validated_argument in kwargs:
            validator.validate(kwargs[validated_argument])
        elif len(params) > parameters_index:
            validator.validate(params[parameters_index])
        else:
            raise ValueError("Method call has missing argument '{}'".format(
                validated_argument))

        return func(*params, **kwargs)
    # validate()

    return validate
# validate_params()
