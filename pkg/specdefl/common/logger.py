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
Provides logging utilites for other modules
"""

#
# IMPORTS
#
import logging

#
# CONSTANTS AND DEFINITIONS
#
CLI_LOG_FORMAT = '%(asctime)s|%(levelname)s|%(name)s: %(message)s'

#
# CODE
#
def get_logger(logger_name, propagate=True):
    """
    Return the named logger with a null handler attached, so that library
    code never writes to the terminal unless the application configured
    logging itself.

    Args:
        logger_name (str): the logger instance name (usually the module name
                           with __name__)
        propagate (bool): whether to propagate the messages up to ancestor
                          loggers

    Returns:
        logging.Logger: Logger instance
    """
    logger = logging.getLogger(logger_name)
    logger.propagate = propagate

    # only one null handler per logger, modules may ask more than once
    if not any(isinstance(handler, logging.NullHandler)
               for handler in logger.handlers):
        logger.addHandler(logging.NullHandler())

    return logger
# get_logger()

def configure_cli_logging(level_name):
    """
    Configure the root logger for command line usage. The library modules
    never call this, only the console entry point does.

    Args:
        level_name (str): one of DEBUG, INFO, WARNING, ERROR

    Raises:
        ValueError: if the level name is unknown
    """
    level = logging.getLevelName(level_name.upper())
    if not isinstance(level, int):
        raise ValueError('Unknown log level {}'.format(level_name))
    logging.basicConfig(level=level, format=CLI_LOG_FORMAT)
# configure_cli_logging()
