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
Module for the TestUtils class.
"""

#
# IMPORTS
#
from specdefl.common.utils import Stopwatch
from unittest import mock

import unittest

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#

class TestUtils(unittest.TestCase):
    """
    Class for tests of the utils module.
    """
    @mock.patch("specdefl.common.utils.perf_counter", autospec=True)
    def test_stopwatch(self, mock_counter):
        """
        Test the elapsed time of a block and the lap reading.

        Args:
            mock_counter (Mock): mock of the perf_counter function
        """
        mock_counter.side_effect = [10.0, 12.5, 13.0]
        watch = Stopwatch()
        self.assertEqual(watch.lap(), 0.0)
        with watch:
            self.assertEqual(watch.lap(), 2.5)
        self.assertEqual(watch.elapsed, 3.0)
    # test_stopwatch()

    @mock.patch("specdefl.common.utils.perf_counter", autospec=True)
    def test_stopwatch_exception(self, mock_counter):
        """
        Test that exceptions pass through and time is still recorded.

        Args:
            mock_counter (Mock): mock of the perf_counter function
        """
        mock_counter.side_effect = [1.0, 4.0]
        watch = Stopwatch()
        with self.assertRaises(RuntimeError):
            with watch:
                raise RuntimeError("boom")
        self.assertEqual(watch.elapsed, 3.0)
    # test_stopwatch_exception()
# TestUtils
