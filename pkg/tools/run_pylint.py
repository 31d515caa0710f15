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
Wrapper script to execute pylint for code guidelines verification
"""

#
# IMPORTS
#
import os
import subprocess
import sys

#
# CONSTANTS AND DEFINITIONS
#
LINT_CMD = 'python3 -m pylint'
DEFAULT_PATHS = ('specdefl', 'tests/unit', 'tests_pytest')

#
# CODE
#
def main():
    """
    Execute pylint with the user provided options, on the whole code base
    unless a module path is among them

    Returns:
        int: return code of the pylint process
    """
    lib_dir = os.path.abspath(
        '{}/..'.format(os.path.dirname(os.path.abspath(__file__))))
    args = sys.argv[1:]
    cmd = [LINT_CMD]
    rc_file = os.path.join(lib_dir, '.pylintrc')
    if os.path.exists(rc_file):
        cmd.append('--rcfile {}'.format(rc_file))
    cmd.extend(args)

    # only options given: check everything
    if all(arg.startswith('-') for arg in args):
        cmd.extend(os.path.join(lib_dir, path) for path in DEFAULT_PATHS)
    return subprocess.call(' '.join(cmd), shell=True)
# main()

if __name__ == '__main__':
    sys.exit(main())
