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
from time import perf_counter

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
class Stopwatch:
    """
    Context manager measuring the wall time of a block of code.

    Usage:
        with Stopwatch() as watch:
            ...
        print(watch.elapsed)
    """

    def __init__(self):
        """
        Constructor
        """
        self._start = None
        self.elapsed = 0.0
    # __init__()

    def __enter__(self):
        """
        Start measuring
        """
        self._start = perf_counter()
        return self
    # __enter__()

    def __exit__(self, exc_type, exc_value, traceback):
        """
        Stop measuring, exceptions are not suppressed
        """
        self.elapsed = perf_counter() - self._start
        return False
    # __exit__()

    def lap(self):
        """
        Seconds elapsed so far, without stopping the watch

        Returns:
            float: elapsed seconds
        """
        if self._start is None:
            return 0.0
        return perf_counter() - self._start
    # lap()
# Stopwatch
