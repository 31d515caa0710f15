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
Experiment reports: stage results, JSON and CSV emission and loading back
of JSON reports
"""

#
# IMPORTS
#
from dataclasses import dataclass, field
from specdefl.common.logger import get_logger
from specdefl.common.params_validators.jsonschema import \
    JsonschemaValidator
from specdefl.common.params_validators.utils import schema_path

import csv
import json
import math

import numpy as np

#
# CONSTANTS AND DEFINITIONS
#
INFINITY = '∞'
NEG_INFINITY = '-∞'
DIVERGED = 'diverged'
NOT_COMPUTED = 'not computed'
STATUSES = ('ok', 'failed', 'skipped')
FORMATS = ('json', 'csv')
REPORT_SCHEMA = schema_path('experiments', 'entities', 'report_type')

#
# CODE
#
def encode_value(value):
    """
    Convert a report value to its JSON form: numpy scalars to python, inf
    and nan to their sentinels, None to the not computed marker.

    Args:
        value (any): value

    Returns:
        any: JSON serializable value
    """
    if value is None:
        return NOT_COMPUTED
    if isinstance(value, (list, tuple, np.ndarray)):
        return [encode_value(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return DIVERGED
        if math.isinf(value):
            return INFINITY if value > 0 else NEG_INFINITY
        return value
    if isinstance(value, (complex, np.complexfloating)):
        return [encode_value(value.real), encode_value(value.imag)]
    return value
# encode_value()

def decode_value(value):
    """
    Reverse encode_value for sentinels.

    Args:
        value (any): JSON value

    Returns:
        any: value with sentinels converted back to floats/None
    """
    if isinstance(value, list):
        return [decode_value(item) for item in value]
    if value == INFINITY:
        return math.inf
    if value == NEG_INFINITY:
        return -math.inf
    if value == DIVERGED:
        return math.nan
    if value == NOT_COMPUTED:
        return None
    return value
# decode_value()

@dataclass
class StageResult:
    """
    Outcome of one pipeline stage
    """
    name: str
    status: str = 'ok'
    values: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self):
        """
        JSON form of the stage
        """
        return {
            'name': self.name,
            'status': self.status,
            'values': {key: encode_value(val)
                       for key, val in self.values.items()},
            'notes': [str(note) for note in self.notes],
            'wall_time': float(self.wall_time),
        }
    # to_dict()
# StageResult

@dataclass
class ExperimentReport:
    """
    Configuration echo, per stage results and the summary of the headline
    numbers (iterations, relres1, relres2, relerr, ...)
    """
    config: dict
    stages: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def add_stage(self, stage):
        """
        Append a stage result

        Args:
            stage (StageResult): the stage

        Returns:
            StageResult: the same stage
        """
        self.stages.append(stage)
        return stage
    # add_stage()

    def stage(self, name):
        """
        Look a stage up by name

        Returns:
            StageResult: the stage or None
        """
        for item in self.stages:
            if item.name == name:
                return item
        return None
    # stage()

    def to_dict(self):
        """
        JSON form of the report
        """
        return {
            'config': {key: encode_value(val)
                       for key, val in self.config.items()},
            'summary': {key: encode_value(val)
                        for key, val in self.summary.items()},
            'stages': [stage.to_dict() for stage in self.stages],
        }
    # to_dict()
# ExperimentReport

def _csv_rows(report):
    """
    One flat row per stage

    Returns:
        tuple: (header, rows)
    """
    value_keys = sorted({key for stage in report.stages
                         for key in stage.values})
    header = ['name', 'status', 'wall_time'] + value_keys + ['notes']
    rows = []
    for stage in report.stages:
        encoded = stage.to_dict()
        row = [stage.name, stage.status, '{:.6g}'.format(stage.wall_time)]
        for key in value_keys:
            value = encoded['values'].get(key, '')
            if isinstance(value, list):
                value = ' '.join(str(item) for item in value)
            row.append(value)
        row.append('; '.join(encoded['notes']))
        rows.append(row)
    return header, rows
# _csv_rows()

def report_emit(report, fmt, path):
    """
    Write a report as JSON (canonical, loadable with load_report) or as CSV
    with one row per stage.

    Args:
        report (ExperimentReport): the report
        fmt (str): json or csv
        path (str): target file

    Raises:
        ValueError: on unknown format
        OSError: on I/O failure
    """
    logger = get_logger(__name__)
    if fmt not in FORMATS:
        raise ValueError('Unknown report format {}'.format(fmt))

    if fmt == 'json':
        with open(path, 'w', encoding='utf-8') as report_fd:
            json.dump(report.to_dict(), report_fd, indent=4,
                      ensure_ascii=False, sort_keys=True)
            report_fd.write('\n')
    else:
        header, rows = _csv_rows(report)
        with open(path, 'w', encoding='utf-8', newline='') as report_fd:
            writer = csv.writer(report_fd)
            writer.writerow(header)
            writer.writerows(rows)
    logger.info('report written to %s (%s, %d stages)', path, fmt,
                len(report.stages))
# report_emit()

def load_report(path):
    """
    Read a JSON report back, validated against the report schema.

    Args:
        path (str): JSON report

    Returns:
        ExperimentReport: the report with sentinels decoded

    Raises:
        ValueError: if the document is not a valid report
    """
    with open(path, 'r', encoding='utf-8') as report_fd:
        content = json.load(report_fd)
    JsonschemaValidator(REPORT_SCHEMA).validate(content)

    stages = [
        StageResult(
            name=item['name'], status=item['status'],
            values={key: decode_value(val)
                    for key, val in item['values'].items()},
            notes=list(item.get('notes', [])),
            wall_time=item['wall_time'])
        for item in content['stages']]
    return ExperimentReport(
        config={key: decode_value(val)
                for key, val in content['config'].items()},
        stages=stages,
        summary={key: decode_value(val)
                 for key, val in content['summary'].items()})
# load_report()

def summary_table(report):
    """
    Human readable summary lines of a report.

    Args:
        report (ExperimentReport): the report

    Returns:
        str: aligned key/value lines followed by the stage list
    """
    lines = []
    width = max([len(key) for key in report.summary] + [8])
    for key in sorted(report.summary):
        value = encode_value(report.summary[key])
        if isinstance(value, float):
            value = '{:.4g}'.format(value)
        lines.append('{}  {}'.format(key.ljust(width), value))
    for stage in report.stages:
        lines.append('[{}] {} ({:.2f}s){}'.format(
            stage.status, stage.name, stage.wall_time,
            ': ' + '; '.join(stage.notes) if stage.notes else ''))
    return '\n'.join(lines)
# summary_table()
