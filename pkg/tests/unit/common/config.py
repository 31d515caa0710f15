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
Unit tests for the config module
"""

#
# IMPORTS
#
from specdefl.common import config
from unittest import mock

import os
import tempfile
import unittest

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
class TestConfig(unittest.TestCase):
    """
    Tests for loading and merging of configuration values
    """
    def setUp(self):
        """
        Create a temporary directory for config files
        """
        self._tmp_dir = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp_dir.cleanup)
    # setUp()

    def _write(self, content):
        """
        Write a config file and return its path
        """
        path = os.path.join(self._tmp_dir.name, "specdefl.yaml")
        with open(path, "w") as file_fd:
            file_fd.write(content)
        return path
    # _write()

    def test_load_mapping(self):
        """
        Test a valid flat mapping
        """
        path = self._write("computation: 4\nproblem: convdiff\n"
                           "outer-tol: 1.0e-7\n")
        values = config.load_config_file(path)
        self.assertEqual(values, {"computation": 4, "problem": "convdiff",
                                  "outer-tol": 1e-7})
    # test_load_mapping()

    def test_load_empty(self):
        """
        Empty files give no values
        """
        self.assertEqual(config.load_config_file(self._write("")), {})
    # test_load_empty()

    def test_load_invalid(self):
        """
        Non mapping content and nested values are rejected
        """
        self.assertRaisesRegex(ValueError, "key-value mapping",
                               config.load_config_file,
                               self._write("- 1\n- 2\n"))
        self.assertRaisesRegex(ValueError, "scalar value",
                               config.load_config_file,
                               self._write("n:\n  a: 1\n"))
    # test_load_invalid()

    def test_env_var(self):
        """
        The environment variable names the default file
        """
        path = self._write("n: 31\n")
        with mock.patch.dict(os.environ, {config.CONFIG_ENV_VAR: path}):
            self.assertEqual(config.load_config_file(), {"n": 31})
        with mock.patch.dict(os.environ, {config.CONFIG_ENV_VAR: ""}):
            self.assertEqual(config.load_config_file(), {})
    # test_env_var()

    def test_merge(self):
        """
        Flags override file values unless they are None
        """
        merged = config.merge_config({"n": 31, "m": 5},
                                     {"n": 99, "m": None, "seed": 3})
        self.assertEqual(merged, {"n": 99, "m": 5, "seed": 3})
    # test_merge()
# TestConfig
