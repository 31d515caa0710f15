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
Unit tests for the command line interface
"""

#
# IMPORTS
#
from specdefl import cli
from specdefl.experiments.report import load_report
from specdefl.linalg.mmio import read_matrix_market, write_matrix_market
from unittest import mock

import io
import numpy as np
import os
import tempfile
import unittest

#
# CONSTANTS AND DEFINITIONS
#

#
# CODE
#
class TestCli(unittest.TestCase):
    """
    Subcommands run through main()
    """
    def setUp(self):
        """
        Isolate the environment, logging setup and the output streams
        """
        self._tmp_dir = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp_dir.cleanup)

        env_patcher = mock.patch.dict(os.environ)
        env_patcher.start()
        self.addCleanup(env_patcher.stop)
        os.environ.pop('SPECDEFL_CFG', None)

        patcher = mock.patch.object(cli, 'configure_cli_logging',
                                    autospec=True)
        self._mock_logging = patcher.start()
        self.addCleanup(patcher.stop)

        patcher = mock.patch('sys.stdout', new_callable=io.StringIO)
        self._stdout = patcher.start()
        self.addCleanup(patcher.stop)
        patcher = mock.patch('sys.stderr', new_callable=io.StringIO)
        self._stderr = patcher.start()
        self.addCleanup(patcher.stop)
    # setUp()

    def _path(self, name):
        """
        File in the temporary directory
        """
        return os.path.join(self._tmp_dir.name, name)
    # _path()

    def test_gen_problem(self):
        """
        The matrix and the right hand side are written
        """
        ret = cli.main(['--log-level', 'INFO', 'gen-problem', '--n', '4',
                        '--re', '10', '--output', self._path('a.mtx'),
                        '--rhs-output', self._path('b.mtx')])
        self.assertEqual(ret, cli.EXIT_OK)
        self._mock_logging.assert_called_once_with('INFO')
        matrix = read_matrix_market(self._path('a.mtx'))
        self.assertEqual(matrix.shape, (16, 16))
        self.assertEqual(matrix.nnz, 5 * 16 - 4 * 4)
        rhs = read_matrix_market(self._path('b.mtx'))
        self.assertEqual(np.asarray(rhs).shape, (16, 1))
        np.testing.assert_allclose(
            np.asarray(rhs).ravel(), matrix @ np.ones(16), atol=1e-14)
        self.assertIn('N=16 nnz=64', self._stdout.getvalue())
    # test_gen_problem()

    def test_eig(self):
        """
        Spectrum summary and CSV dump
        """
        ret = cli.main(['eig', '--n', '6', '--re', '0',
                        '--csv', self._path('eigs.csv')])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('N=36 inside=1', self._stdout.getvalue())
        with open(self._path('eigs.csv'), 'r') as csv_fd:
            self.assertEqual(len(csv_fd.read().splitlines()), 37)
    # test_eig()

    def test_eig_too_large(self):
        """
        eig-max-size guards the dense computation
        """
        ret = cli.main(['eig', '--n', '6', '--eig-max-size', '10'])
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertIn('eig-max-size', self._stderr.getvalue())
    # test_eig_too_large()

    def test_compute_z_and_cge(self):
        """
        Z is written and its columns selected
        """
        ret = cli.main(['compute-z', '--n', '6', '--re', '0', '--m', '2',
                        '--center', '0.4', '--radius', '0.2',
                        '--inner-tol', '1e-12',
                        '--output', self._path('z.mtx')])
        self.assertEqual(ret, cli.EXIT_OK)
        z_mat = read_matrix_market(self._path('z.mtx'))
        self.assertEqual(np.asarray(z_mat).shape, (36, 2))
        self.assertIn('Z 36x2', self._stdout.getvalue())

        ret = cli.main(['cge', '--z', self._path('z.mtx'),
                        '--output', self._path('z_sel.mtx')])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('rk=1', self._stdout.getvalue())
        self.assertEqual(
            np.asarray(read_matrix_market(self._path('z_sel.mtx'))).shape,
            (36, 1))
    # test_compute_z_and_cge()

    def test_cge_dependent_columns(self):
        """
        The duplicate column is dropped
        """
        z_col = np.arange(1.0, 6.0).reshape(-1, 1)
        write_matrix_market(self._path('z.mtx'),
                            np.hstack([z_col, 2.0 * z_col]))
        ret = cli.main(['cge', '--z', self._path('z.mtx')])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('rk=1 columns=[1]', self._stdout.getvalue())
    # test_cge_dependent_columns()

    def test_solve(self):
        """
        Plain and deflated solves
        """
        ret = cli.main(['solve', '--n', '6', '--re', '0'])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('converged=True', self._stdout.getvalue())

        z_mat = np.zeros((36, 1))
        z_mat[0, 0] = 1.0
        write_matrix_market(self._path('z.mtx'), z_mat)
        ret = cli.main(['solve', '--n', '6', '--re', '0', '--solver',
                        'mbicg', '--z', self._path('z.mtx')])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('relres1=', self._stdout.getvalue())
    # test_solve()

    def test_run_and_report(self):
        """
        A run writes its report, the report subcommand converts it
        """
        ret = cli.main(['run', '--computation', '1', '--n', '6',
                        '--re', '50', '--report', self._path('r.json')])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertIn('[ok] solve', self._stdout.getvalue())
        report = load_report(self._path('r.json'))
        self.assertTrue(report.summary['converged'])
        self.assertEqual(report.config['n'], 6)

        ret = cli.main(['report', '--input', self._path('r.json')])
        self.assertEqual(ret, cli.EXIT_OK)
        ret = cli.main(['report', '--input', self._path('r.json'),
                        '--format', 'csv', '--output',
                        self._path('r.csv')])
        self.assertEqual(ret, cli.EXIT_OK)
        self.assertTrue(os.path.exists(self._path('r.csv')))

        ret = cli.main(['report', '--input', self._path('r.json'),
                        '--format', 'csv'])
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertIn('--output is required', self._stderr.getvalue())
    # test_run_and_report()

    def test_config_file(self):
        """
        Flags override the values of the config file
        """
        with open(self._path('cfg.yaml'), 'w') as cfg_fd:
            cfg_fd.write('computation: 4\nn: 20\nre: 3.5\nm: 2\n')
        args = cli.build_parser().parse_args(
            ['--config', self._path('cfg.yaml'), 'run', '--n', '5'])
        config = cli._config_from_args(args)
        self.assertEqual((config.computation, config.n, config.re,
                          config.m), (4, 5, 3.5, 2))
    # test_config_file()

    def test_errors(self):
        """
        Invalid values and missing files give exit code 2
        """
        ret = cli.main(['run', '--radius', '-1'])
        self.assertEqual(ret, cli.EXIT_ERROR)
        ret = cli.main(['solve', '--problem', 'mmfile'])
        self.assertEqual(ret, cli.EXIT_ERROR)
        self.assertIn('matrix', self._stderr.getvalue())
        ret = cli.main(['solve', '--problem', 'mmfile', '--matrix',
                        self._path('missing.mtx')])
        self.assertEqual(ret, cli.EXIT_ERROR)
        ret = cli.main(['report', '--input', self._path('missing.json')])
        self.assertEqual(ret, cli.EXIT_ERROR)
    # test_errors()

    def test_usage_error(self):
        """
        argparse rejects unknown choices
        """
        with self.assertRaises(SystemExit) as ctx:
            cli.main(['run', '--computation', '9'])
        self.assertEqual(ctx.exception.code, 2)
        with self.assertRaises(SystemExit):
            cli.main([])
    # test_usage_error()
# TestCli
