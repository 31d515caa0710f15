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
Entry point to setuptools, used for installing/packaging the library
"""

#
# IMPORTS
#
from fnmatch import fnmatch
from setuptools import find_packages, setup

import os
import re
import subprocess

#
# CONSTANTS AND DEFINITIONS
#
AUTHOR = 'specdefl contributors'
CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'Environment :: Console',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: Apache Software License',
    'Operating System :: POSIX :: Linux',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
]
DESCRIPTION = (
    'Deflated GMRES and BiCG with contour-integral deflation subspaces')
LICENSE = 'Apache 2.0'
with open('README.md', 'r') as desc_fd:
    LONG_DESCRIPTION = desc_fd.read()
LONG_DESC_TYPE = 'text/markdown'
KEYWORDS = 'krylov gmres bicg deflation contour-integral eigenvalues'
NAME = 'specdefl'
ENTRY_POINTS = {'console_scripts': ['specdefl = specdefl.cli:main']}
UNKNOWN_VERSION = '0+unknown'

#
# CODE
#
def _find_package_data(dir_name):
    """
    List the non python files below a package (json schemas)

    Args:
        dir_name (str): package directory

    Returns:
        list: paths relative to the package
    """
    data_files = []
    for root, _, filenames in os.walk(dir_name):
        for filename in filenames:
            if fnmatch(filename, '*.py?') or filename.endswith('.py'):
                continue
            data_files.append(os.path.relpath(
                os.path.join(root, filename), dir_name))
    return data_files
# _find_package_data()

def _find_requirements():
    """
    List all installation requirements

    Returns:
        list: installation requirements
    """
    with open('requirements.txt', 'r') as req_fd:
        lines = req_fd.readlines()
    return [line.strip() for line in lines
            if line.strip() and not re.match('^ *#', line)]
# _find_requirements()

def gen_version():
    """
    PEP440 version from git describe: {tag} on a tagged commit,
    {tag}.post{count}.dev0+g{commit} after it, 0+unknown without git.

    Returns:
        str: the calculated version
    """
    result = subprocess.run(
        'git describe --long --tags --dirty', shell=True,
        stdout=subprocess.PIPE, stderr=subprocess.DEVNULL,
        universal_newlines=True)
    if result.returncode != 0:
        return UNKNOWN_VERSION
    fields = result.stdout.strip().split('-')
    dirty = ''
    if fields[-1] == 'dirty':
        dirty = '.dirty'
        fields.pop()
    if len(fields) < 3:
        return UNKNOWN_VERSION

    tag, count, commit = '-'.join(fields[:-2]), fields[-2], fields[-1]
    if count == '0':
        return '{}.dev0+{}{}'.format(tag, commit, dirty) if dirty else tag
    return '{}.post{}.dev0+{}{}'.format(tag, count, commit, dirty)
# gen_version()

if __name__ == '__main__':
    setup(
        # metadata information
        author=AUTHOR,
        classifiers=CLASSIFIERS,
        description=DESCRIPTION,
        keywords=KEYWORDS,
        license=LICENSE,
        long_description=LONG_DESCRIPTION,
        long_description_content_type=LONG_DESC_TYPE,
        name=NAME,
        # installation information
        entry_points=ENTRY_POINTS,
        install_requires=_find_requirements(),
        package_data={'specdefl': _find_package_data('specdefl')},
        packages=find_packages(exclude=[
            'tests', 'tests.*', 'tests_pytest', 'tests_pytest.*']),
        python_requires='>=3.7',
        setup_requires=['setuptools>=30.3.0'],
        version=gen_version(),
        zip_safe=False,
    )
