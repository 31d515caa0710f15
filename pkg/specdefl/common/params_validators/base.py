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
Base class of the json schema validators guarding experiment parameters
and report documents. Validation errors name the schema that rejected the
document (build_config, report_type).
"""

#
# IMPORTS
#
import abc
import json
import os

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#

class BaseParamsValidator(metaclass=abc.ABCMeta):
    """
    Base class of the validators checking experiment parameters and report
    documents against json schemas.
    """

    def __init__(self, schema_file):
        """
        Load and check the json schema.

        Args:
            schema_file (str): path to the file containing the json schema

        Raises:
            ValueError: if the schema is not valid
        """
        with open(schema_file, "r") as schema_file_desc:
            self.schema = json.load(schema_file_desc)

        # base uri used to resolve relative references to entity schemas
        self.schema['id'] = "file://" + os.path.abspath(schema_file)

        # file name without extension, e.g. build_config
        self.schema_name = os.path.splitext(os.path.basename(schema_file))[0]

        self._check_schema()
    # __init__()

    @abc.abstractmethod
    def _check_schema(self):
        """
        Check that the loaded json schema is valid.

        Raises:
            NotImplementedError: to avoid the method being called.
        """
        raise NotImplementedError()
    # _check_schema()

    @abc.abstractmethod
    def validate(self, parameters):
        """
        Validate parameters against the loaded json schema.

        Args:
            parameters (dict): parameters to be validated.

        Raises:
            NotImplementedError: as it has to be implemented in concrete
                                 classes
        """
        raise NotImplementedError()
    # validate()
# BaseParamsValidator
