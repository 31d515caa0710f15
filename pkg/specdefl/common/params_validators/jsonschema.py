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
Draft 4 json schema validator built on the jsonschema package
"""
#
# IMPORTS
#
from specdefl.common.params_validators.base import BaseParamsValidator
import jsonschema

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
class JsonschemaValidator(BaseParamsValidator):
    """
    Validator backed by the jsonschema library (draft 4 schemas).
    """
    def _check_schema(self):
        """
        Check that the loaded json schema is a valid draft 4 schema.

        Raises:
            ValueError: if the json schema loaded is not valid.
        """
        try:
            jsonschema.Draft4Validator.check_schema(self.schema)
        except jsonschema.SchemaError as exc:
            raise ValueError("Invalid schema") from exc
    # _check_schema()

    def validate(self, parameters):
        """
        Validate a document against the loaded json schema.

        Args:
            parameters (dict): document to validate

        Raises:
            ValueError: naming the offending key when validation fails
        """
        try:
            jsonschema.validate(parameters, self.schema,
                                cls=jsonschema.Draft4Validator)
        except jsonschema.ValidationError as exc:
            location = '/'.join(str(item) for item in exc.absolute_path)
            raise ValueError("Invalid parameter '{}' of {}: {}".format(
                location or '<root>', self.schema_name, exc.message)) from exc
    # validate()
# JsonschemaValidator
