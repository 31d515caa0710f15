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
Module for unit tests of the utility functions of the params validators.
"""

#
# IMPORTS
#
from specdefl.common.params_validators import utils
from unittest import mock

import os
import unittest

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
class TestUtils(unittest.TestCase):
    """
    Unit tests for the utility functions of parameters validation.
    """

    def test_func_name_is_not_valid(self):
        """
        Test the case that the decorated function name is not a known
        action.
        """
        def not_valid_function_name(parameters):
            return parameters

        self.assertRaisesRegex(NameError, "should only decorate",
                               utils.validate_params, not_valid_function_name)
    # test_func_name_is_not_valid()

    def test_func_argument_not_valid(self):
        """
        Test the case that the decorated function lacks the argument to
        validate.
        """
        def build_config(options):
            return options

        self.assertRaisesRegex(NameError, "Decorated function does",
                               utils.validate_params, build_config)
    # test_func_argument_not_valid()

    @mock.patch("specdefl.common.params_validators.utils.JsonschemaValidator",
                autospec=True)
    def test_validate_params(self, mock_json_validator):
        """
        Test the schema path and the validated argument, positional and
        keyword.

        Args:
            mock_json_validator (Mock): the JsonschemaValidator class
        """
        func = mock.Mock()

        def build_config(parameters, extra=None):
            return func(parameters, extra)

        decorated = utils.validate_params(build_config)
        dir_name = os.path.basename(os.path.dirname(__file__))
        mock_json_validator.assert_called_with(
            utils.schema_path(dir_name, "actions", "build_config"))

        decorated({"n": 3})
        mock_json_validator.return_value.validate.assert_called_with(
            {"n": 3})
        func.assert_called_with({"n": 3}, None)

        decorated(parameters={"n": 4}, extra=1)
        mock_json_validator.return_value.validate.assert_called_with(
            {"n": 4})

        self.assertRaisesRegex(ValueError, "missing argument",
                               decorated, extra=1)
    # test_validate_params()

    def test_schema_path(self):
        """
        Test the location of schema files
        """
        path = utils.schema_path("experiments", "entities", "report_type")
        self.assertTrue(path.endswith(
            "schemas/experiments/entities/report_type.json"))
        self.assertTrue(os.path.isfile(path))
    # test_schema_path()
# TestUtils
