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
Matrix Market exchange format reader/writer.

Coordinate files become complex CSR matrices with symmetric, skew-symmetric
and hermitian storage expanded to general; array files become complex
column-major dense matrices. The SuiteSparse matrices used by the
experiments (bcsstm27, mahindas) are not shipped, users download them.
"""

#
# IMPORTS
#
from dataclasses import dataclass
from specdefl.common.logger import get_logger
from specdefl.linalg.exceptions import MatrixMarketError
from specdefl.linalg.numcore import as_dense, as_sparse

import numpy as np
import scipy.io
import scipy.sparse as sps

#
# CONSTANTS AND DEFINITIONS
#
BANNER = '%%MatrixMarket'
FORMATS = ('coordinate', 'array')
FIELDS = ('real', 'complex', 'integer', 'pattern')
SYMMETRIES = ('general', 'symmetric', 'skew-symmetric', 'hermitian')
# significant digits printed for every value
PRECISION = 17

#
# CODE
#
@dataclass(frozen=True)
class MatrixMarketHeader:
    """
    The banner line of a Matrix Market file
    """
    object: str
    format: str
    field: str
    symmetry: str

    def validate(self, path=None):
        """
        Accept only the combinations allowed by Matrix Market 1.0.

        Args:
            path (str): file name for error messages

        Raises:
            MatrixMarketError: on unsupported combination
        """
        if self.object != 'matrix':
            raise MatrixMarketError(
                'unsupported object {}'.format(self.object), path)
        if self.format not in FORMATS:
            raise MatrixMarketError(
                'unsupported format {}'.format(self.format), path)
        if self.field not in FIELDS:
            raise MatrixMarketError(
                'unsupported field {}'.format(self.field), path)
        if self.symmetry not in SYMMETRIES:
            raise MatrixMarketError(
                'unsupported symmetry {}'.format(self.symmetry), path)
        if self.format == 'array' and self.field == 'pattern':
            raise MatrixMarketError('array format cannot be pattern', path)
        if self.symmetry == 'hermitian' and self.field != 'complex':
            raise MatrixMarketError(
                'hermitian symmetry requires complex field', path)
        if self.symmetry == 'skew-symmetric' and self.field == 'pattern':
            raise MatrixMarketError(
                'skew-symmetric symmetry cannot be pattern', path)
    # validate()
# MatrixMarketHeader

@dataclass(frozen=True)
class MatrixMarketInfo:
    """
    What was read from a file: header, size and the two nonzero counts
    (entries stored in the file and entries after symmetry expansion).
    """
    header: MatrixMarketHeader
    rows: int
    cols: int
    stored_entries: int
    expanded_entries: int
    duplicates: int
# MatrixMarketInfo

def read_header(path):
    """
    Parse the banner line of a Matrix Market file.

    Args:
        path (str): file to read

    Returns:
        MatrixMarketHeader: parsed and validated header

    Raises:
        MatrixMarketError: if the banner is missing or malformed
    """
    with open(path, 'r') as mm_fd:
        banner = mm_fd.readline().strip()
    tokens = banner.split()
    if len(tokens) != 5 or tokens[0] != BANNER:
        raise MatrixMarketError(
            'malformed header line: {!r}'.format(banner), path)
    header = MatrixMarketHeader(*(token.lower() for token in tokens[1:]))
    header.validate(path)
    return header
# read_header()

def read_matrix_market(path, return_info=False):
    """
    Read a Matrix Market file.

    Duplicate coordinate entries are summed (Matrix Market convention) and
    reported with a warning.

    Args:
        path (str): file to read
        return_info (bool): also return a MatrixMarketInfo

    Returns:
        scipy.sparse.csr_matrix or numpy.ndarray: the matrix, or a tuple
            (matrix, MatrixMarketInfo) when return_info is set

    Raises:
        MatrixMarketError: malformed header or body, index out of range
    """
    logger = get_logger(__name__)
    header = read_header(path)

    try:
        rows, cols, stored, _, _, _ = scipy.io.mminfo(path)
        content = scipy.io.mmread(path)
    except (ValueError, IndexError, TypeError) as exc:
        raise MatrixMarketError(
            'cannot parse {}: {}'.format(path, exc), path) from exc

    duplicates = 0
    if header.format == 'coordinate':
        coo = sps.coo_matrix(content)
        if coo.nnz and (coo.row.max() >= rows or coo.col.max() >= cols or
                        coo.row.min() < 0 or coo.col.min() < 0):
            raise MatrixMarketError('index out of range', path)
        keys = coo.row.astype(np.int64) * cols + coo.col
        duplicates = int(coo.nnz - np.unique(keys).size)
        if duplicates:
            logger.warning(
                '%s: %d duplicate entries found, values were summed',
                path, duplicates)
        matrix = as_sparse(coo, what=path)
        expanded = matrix.nnz
    else:
        matrix = as_dense(content, what=path)
        expanded = matrix.size

    logger.info('read %s: %dx%d %s %s %s, %d stored / %d expanded entries',
                path, rows, cols, header.format, header.field,
                header.symmetry, stored, expanded)

    if return_info:
        info = MatrixMarketInfo(header, int(rows), int(cols), int(stored),
                                int(expanded), duplicates)
        return matrix, info
    return matrix
# read_matrix_market()

def write_matrix_market(path, matrix, comment=''):
    """
    Write a sparse matrix in coordinate format or a dense matrix in array
    format, always with general symmetry. The field is real when every
    imaginary part is zero and complex otherwise.

    Args:
        path (str): target file
        matrix (scipy.sparse matrix or numpy.ndarray): data to write
        comment (str): optional comment written after the banner

    Raises:
        MatrixMarketError: on I/O failure
    """
    logger = get_logger(__name__)

    if sps.issparse(matrix):
        data = sps.coo_matrix(matrix)
        values = data.data
    else:
        data = np.asarray(matrix)
        if data.ndim == 1:
            data = data.reshape(-1, 1)
        values = data
    if np.iscomplexobj(values) and np.any(np.imag(values) != 0.0):
        field = 'complex'
    else:
        field = 'real'
        data = data.real if not sps.issparse(data) else sps.coo_matrix(
            (data.data.real, (data.row, data.col)), shape=data.shape)

    try:
        # an open handle keeps scipy from appending a .mtx suffix
        with open(path, 'wb') as mm_fd:
            scipy.io.mmwrite(mm_fd, data, comment=comment, field=field,
                             precision=PRECISION, symmetry='general')
    except OSError as exc:
        raise MatrixMarketError(
            'cannot write {}: {}'.format(path, exc), path) from exc
    logger.debug('wrote %s (%s, %s)', path,
                 'coordinate' if sps.issparse(matrix) else 'array', field)
# write_matrix_market()
