# -*- coding: utf-8 -*-
# Module: Navigation
# License: MIT

"""Tests for the `navigation` module and the command line entry point"""

import io
import json
import math
import os
import shutil
import tempfile
import unittest

import mock

import paralattice
from resources.lib.globals import g
from resources.lib.navigation import InvalidCommandError, execute
from resources.lib.navigation.commands import CommandExecutor
from resources.lib.report import (CERTIFIED_ORTHOGONAL, CERTIFIED_RIESZ,
                                  EVIDENCE_ONLY, REJECTED, UNKNOWN,
                                  ConfigError, parse_config)
from resources.test.mocks.MatrixFixtures import (H_EX_CONFIG, ROTATION_30,
                                                 rotation)

LARGE_ROTATION = rotation(30.0, 0.5).tolist()
SMALL_LADDER = {'ladder_radii': [3, 6], 'density_radii': [50, 100]}


def _run(command, raw):
    return execute(CommandExecutor, command, parse_config(raw, command))


def _config(**fields):
    raw = dict(SMALL_LADDER)
    raw.update(fields)
    return raw


class CertifyTestCase(unittest.TestCase):
    """Tests for the certify command"""

    def setUp(self):
        g.reset_defaults()

    def test_lower_triangular_example(self):
        """H_EX is certified through the rounded dual
        construction found by the witness search"""
        report = _run('certify', _config(A=H_EX_CONFIG))
        self.assertEqual(report.verdict, CERTIFIED_RIESZ)
        self.assertEqual(report.theorem,
                         'riesz-witness-integer-lattice-heuristic')
        self.assertEqual(report.exit_code, 0)
        self.assertEqual(report.conditions[0]['condition'], 'rounding-bound')
        self.assertTrue(report.conditions[0]['satisfied'])
        self.assertTrue(report.sections['witness']['found'])
        self.assertEqual(report.sections['construction']['frequencies']
                         ['provenance'], 'rounded-dual')
        self.assertFalse(report.sections['gram']['numerical_failure'])
        self.assertAlmostEqual(report.sections['density']['expected'],
                               1.0 / math.sqrt(6.0))

    def test_orthogonal_example_is_obstructed(self):
        """1 / |det A| = sqrt(6) rules out an orthogonal basis"""
        report = _run('certify', _config(A=H_EX_CONFIG, mode='orthogonal'))
        self.assertEqual(report.verdict, REJECTED)
        self.assertEqual(report.theorem, 'orthogonal-volume')
        self.assertEqual(report.exit_code, 1)
        self.assertAlmostEqual(
            report.sections['volume_obstruction']['inverse_volume'],
            math.sqrt(6.0))
        self.assertNotIn('gram', report.sections)

    def test_orthogonal_unitriangular(self):
        """Z^2 is an orthogonal basis on a unitriangular parallelepiped"""
        report = _run('certify', _config(A=[[1, 0], [3, 1]],
                                         mode='orthogonal',
                                         density_radii=[10, 20]))
        self.assertEqual(report.verdict, CERTIFIED_ORTHOGONAL)
        self.assertEqual(report.theorem, 'orthogonal-witness-heuristic')
        self.assertTrue(report.sections['orthogonality']['orthogonal'])
        self.assertEqual(report.bounds[0]['lower'], 1.0)
        self.assertEqual(report.bounds[0]['upper'], 1.0)

    def test_witness_mode_decides(self):
        """An orthogonal witness without a top-level mode certifies an
        orthogonal basis"""
        report = _run('certify', _config(
            A=[[1, 0], [3, 1]], density_radii=[10, 20],
            witness={'H': [[1, 0], [3, 1]], 'mode': 'orthogonal'}))
        self.assertEqual(report.verdict, CERTIFIED_ORTHOGONAL)
        self.assertEqual(report.theorem, 'orthogonal-witness')
        self.assertEqual(report.sections['witness']['witness']['mode'],
                         'orthogonal')
        self.assertTrue(report.sections['orthogonality']['orthogonal'])

    def test_orthogonal_witness_rejected(self):
        """A configured witness that fails rejects the run"""
        report = _run('certify', _config(
            A=H_EX_CONFIG, mode='orthogonal',
            witness={'H': [[1, 0], [0, 1]]}))
        self.assertEqual(report.verdict, REJECTED)
        self.assertEqual(report.theorem, 'orthogonal-witness')
        self.assertFalse(report.sections['witness']['check']['accepted'])

    def test_spectral_norm(self):
        """A small rotation is certified by the spectral norm condition"""
        report = _run('certify', {'A': ROTATION_30.tolist(),
                                  'ladder_radii': [20, 40],
                                  'density_radii': [100, 200]})
        self.assertEqual(report.verdict, CERTIFIED_RIESZ)
        self.assertEqual(report.theorem, 'spectral-norm')
        self.assertFalse(report.sections['witness']['found'])
        names = [condition['condition'] for condition in report.conditions]
        self.assertEqual(names, ['spectral-norm', 'bailey'])
        self.assertTrue(all(condition['satisfied']
                            for condition in report.conditions))

    def test_nothing_applies(self):
        """Without a witness, a small norm or a construction: unknown"""
        report = _run('certify', _config(A=LARGE_ROTATION))
        self.assertEqual(report.verdict, UNKNOWN)
        self.assertEqual(report.exit_code, 1)
        self.assertFalse(report.conditions[0]['satisfied'])

    def test_fallback_to_construction(self):
        """A configured construction still yields numerical evidence"""
        report = _run('certify', _config(
            A=LARGE_ROTATION,
            construction={'rule': 'dual'},
            density_radii=[20, 40]))
        self.assertEqual(report.verdict, EVIDENCE_ONLY)
        self.assertIn('gram', report.sections)

    def test_bound_requests(self):
        """Bound requests are evaluated alongside"""
        report = _run('certify', _config(
            A=H_EX_CONFIG, bounds=[{'kind': 'kadec', 'L': 0.2}]))
        self.assertEqual(report.bounds[0]['source']['theorem'], 'kadec')


class ConstructTestCase(unittest.TestCase):
    """Tests for the construct and verify commands"""

    def setUp(self):
        g.reset_defaults()

    def test_rounded_dual(self):
        """Rows and the rounding bound of H_EX"""
        report = _run('construct', {'A': H_EX_CONFIG,
                                    'construction': {'rule': 'rounded-dual',
                                                     'N': 4}})
        self.assertEqual(report.verdict, EVIDENCE_ONLY)
        section = report.sections['construction']
        self.assertEqual(section['size'], 81)
        self.assertIn({'j': 0, 'X': [-7, -5, -3, -2, 0, 2, 3, 5, 7]},
                      section['rows'])
        self.assertTrue(report.conditions[0]['satisfied'])

    def test_norm_too_large_is_embedded(self):
        """Library errors end up in the report"""
        report = _run('construct', {'A': [[0.2, 0], [0, 0.2]],
                                    'construction': {
                                        'rule': 'spectral-norm'}})
        self.assertEqual(report.verdict, REJECTED)
        self.assertEqual(report.errors[0]['error'], 'NormTooLargeError')

    def test_verify(self):
        """Ladder and density of the rounded H_EX set"""
        report = _run('verify', _config(
            A=H_EX_CONFIG, construction={'rule': 'rounded-dual'},
            tolerances={'density': 0.1}))
        self.assertEqual(report.verdict, EVIDENCE_ONLY)
        self.assertEqual(report.sections['gram']['radius_ladder'], [3, 6])
        self.assertTrue(report.sections['density']['consistent'])
        self.assertEqual(g.DENSITY_TOL, 0.05)


class DecomposeTestCase(unittest.TestCase):
    """Tests for the decompose command"""

    def setUp(self):
        g.reset_defaults()

    def test_configured_witness(self):
        """H_EX is its own witness"""
        report = _run('decompose', {'A': H_EX_CONFIG,
                                    'witness': {'H': H_EX_CONFIG}})
        self.assertEqual(report.verdict, CERTIFIED_RIESZ)
        self.assertEqual(report.theorem, 'riesz-witness-integer-lattice')
        self.assertTrue(report.sections['structure']['classification']
                        ['is_lower_triangular'])

    def test_search_fails(self):
        """No witness for a rotation leaves the verdict unknown"""
        report = _run('decompose', {'A': ROTATION_30.tolist()})
        self.assertEqual(report.verdict, UNKNOWN)
        self.assertFalse(report.sections['witness']['found'])

    def test_orthogonal_obstruction(self):
        """The volume obstruction rejects before any search"""
        report = _run('decompose', {'A': H_EX_CONFIG, 'mode': 'orthogonal'})
        self.assertEqual(report.verdict, REJECTED)
        self.assertNotIn('witness', report.sections)

    def test_witness_mode_is_checked(self):
        """The structure test follows the mode of the witness"""
        report = _run('decompose', {
            'A': H_EX_CONFIG,
            'witness': {'H': H_EX_CONFIG, 'mode': 'orthogonal'}})
        self.assertEqual(report.verdict, REJECTED)
        self.assertEqual(report.theorem, 'orthogonal-witness')
        self.assertIn('unitriangular',
                      report.sections['witness']['check']['failures'])

    def test_tolerances_are_run_scoped(self):
        """Tolerance overrides are undone once the run is over"""
        report = _run('decompose', {'A': H_EX_CONFIG,
                                    'witness': {'H': H_EX_CONFIG},
                                    'tolerances': {'eps_num': 0.5}})
        self.assertEqual(report.verdict, CERTIFIED_RIESZ)
        self.assertEqual(g.EPS_NUM, 1e-9)

    @mock.patch('resources.lib.navigation.commands.check_witness')
    def test_tolerances_restored_after_failure(self, mock_check):
        """Overrides are undone when the run raises"""
        mock_check.side_effect = RuntimeError('boom')
        with self.assertRaises(RuntimeError):
            _run('decompose', {'A': H_EX_CONFIG,
                                'witness': {'H': H_EX_CONFIG},
                                'tolerances': {'eps_num': 0.5,
                                               'density': 0.2}})
        self.assertEqual(g.EPS_NUM, 1e-9)
        self.assertEqual(g.DENSITY_TOL, 0.05)


class BoundsTestCase(unittest.TestCase):
    """Tests for the bounds command"""

    def setUp(self):
        g.reset_defaults()

    def test_certificates_and_sequences(self):
        """Certificates, conditions and Beatty sequences"""
        report = _run('bounds', {'bounds': [
            {'kind': 'kadec', 'L': 0.2},
            {'kind': 'lindner', 'B': 0, 'delta': 1, 'L': 0, 'P': 1},
            {'kind': 'transform', 'op': 'linear-map', 'A': [[2, 0], [0, 1]],
             'of': {'kind': 'tensor', 'Ls': [0.2, 0.1]}},
            {'kind': 'kadec-condition', 'deltas': [0.1, -0.2, 0.0]},
            {'kind': 'beatty', 'alpha': '2/3', 'k_range': [-4, 2]},
            {'kind': 'reference-shift', 'alpha': '2/3', 'P': 2}]})
        self.assertEqual(report.verdict, EVIDENCE_ONLY)
        data = report.to_dict()
        self.assertEqual(len(data['bounds']), 4)
        self.assertTrue(data['bounds'][1]['underflow'])
        self.assertAlmostEqual(data['bounds'][2]['lower'], 0.020175 / 2.0,
                               places=6)
        self.assertAlmostEqual(
            data['bounds'][3]['source']['parameters']['L'], 0.2)
        beatty, shift = data['sequences']
        self.assertEqual(beatty['values'], [-6, -5, -3, -2, 0, 1, 3])
        self.assertEqual(beatty['alpha'], '2/3')
        self.assertEqual(shift['shift'], '-1/6')

    def test_failed_condition_rejects(self):
        """Alternating 0.3 violates the 1/4 condition"""
        report = _run('bounds', {'bounds': [{
            'kind': 'kadec-condition', 'window': [-4, 3],
            'delta': {'kind': 'alternating', 'amplitude': 0.3}}]})
        self.assertEqual(report.verdict, REJECTED)
        self.assertEqual(report.bounds, [])

    def test_avdonin_and_equidistribution(self):
        """Conditions in the mean"""
        report = _run('bounds', {'bounds': [
            {'kind': 'avdonin-condition', 'window': [-4, 3], 'P': 2,
             'sep_min': 0.3,
             'delta': {'kind': 'alternating', 'amplitude': 0.3}},
            {'kind': 'equidistribution', 'alpha': 'sqrt(2)',
             'betas': [0], 'P': 10000, 'm_range': [0, 1],
             'epsilon': 0.001}]})
        self.assertEqual(report.verdict, EVIDENCE_ONLY)
        self.assertEqual([condition['condition']
                          for condition in report.conditions],
                         ['avdonin', 'equidistribution'])

    def test_out_of_range_is_embedded(self):
        """Bound formulas refuse parameters outside their hypotheses"""
        report = _run('bounds', {'bounds': [{'kind': 'kadec', 'L': 0.3}]})
        self.assertEqual(report.verdict, REJECTED)
        self.assertEqual(report.errors[0]['error'], 'OutOfRangeError')


class EmitPointsTestCase(unittest.TestCase):
    """Tests for the emit-points command"""

    def setUp(self):
        g.reset_defaults()
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)
        g.reset_defaults()

    def test_points(self):
        """All series by default"""
        g.POINTS_PATH = os.path.join(self.folder, 'points.csv')
        report = _run('emit-points', {'A': H_EX_CONFIG,
                                      'construction': {'rule': 'dual',
                                                       'N': 1}})
        self.assertEqual(report.sections['points']['rows'],
                         {'lattice': 9, 'dual': 9, 'rounded': 9,
                          'vertices': 4})
        self.assertTrue(os.path.exists(g.POINTS_PATH))

    def test_missing_target(self):
        """--points is required"""
        with self.assertRaises(ConfigError) as context:
            _run('emit-points', {'A': H_EX_CONFIG})
        self.assertEqual(context.exception.path, '--points')


class RoutingTestCase(unittest.TestCase):
    """Tests for command routing and the entry point"""

    def setUp(self):
        g.reset_defaults()
        self.folder = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.folder)
        g.reset_defaults()

    def _write_config(self, raw, name='run.json'):
        path = os.path.join(self.folder, name)
        with open(path, 'w') as config_file:
            if isinstance(raw, str):
                config_file.write(raw)
            else:
                json.dump(raw, config_file)
        return path

    def _main(self, command, config_path, out_name='report.json'):
        out = os.path.join(self.folder, out_name)
        code = paralattice.main(['paralattice', command, '--config',
                                 config_path, '--out', out])
        with open(out) as report_file:
            return code, report_file.read()

    def test_unknown_command(self):
        """Only the six commands are routed"""
        config = parse_config({'bounds': [{'kind': 'kadec', 'L': 0.1}]},
                              'bounds')
        with self.assertRaises(InvalidCommandError):
            execute(CommandExecutor, 'plot', config)
        with self.assertRaises(InvalidCommandError):
            paralattice.route('plot', config)

    def test_main_success(self):
        """Exit code 0 and a deterministic report"""
        path = self._write_config({'bounds': [{'kind': 'kadec', 'L': 0.2}]})
        code, first = self._main('bounds', path, 'first.json')
        self.assertEqual(code, 0)
        _, second = self._main('bounds', path, 'second.json')
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first)['verdict'], EVIDENCE_ONLY)

    def test_main_rejected(self):
        """Exit code 1 for a rejected run"""
        path = self._write_config({'A': H_EX_CONFIG, 'mode': 'orthogonal'})
        code, text = self._main('decompose', path)
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(text)['verdict'], REJECTED)

    def test_main_config_error(self):
        """Exit code 2 and the error in the report"""
        path = self._write_config('{"A": ')
        code, text = self._main('certify', path)
        self.assertEqual(code, paralattice.EXIT_CONFIG_ERROR)
        data = json.loads(text)
        self.assertEqual(data['errors'][0]['error'], 'ConfigError')
        self.assertEqual(data['verdict'], REJECTED)

    def test_main_stdout(self):
        """Without --out the report goes to stdout"""
        path = self._write_config({'bounds': [{'kind': 'kadec', 'L': 0.1}]})
        with mock.patch('sys.stdout', new_callable=io.StringIO) as stdout:
            code = paralattice.main(['paralattice', 'bounds', '--config',
                                     path])
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(stdout.getvalue())['command'], 'bounds')

    @mock.patch('paralattice.route')
    def test_main_unexpected_error(self, mock_route):
        """Unexpected errors give exit code 1 without a report"""
        mock_route.side_effect = RuntimeError('boom')
        path = self._write_config({'bounds': [{'kind': 'kadec', 'L': 0.1}]})
        out = os.path.join(self.folder, 'report.json')
        code = paralattice.main(['paralattice', 'bounds', '--config', path,
                                 '--out', out])
        self.assertEqual(code, 1)
        self.assertFalse(os.path.exists(out))


if __name__ == '__main__':
    unittest.main()
