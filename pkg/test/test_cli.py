# unit tests for the kepler command line

import kepler.cli as cli
import contextlib
import io
import math
import os
import pandas as pd
import tempfile
import unittest

def run(argv):
    """runs the command line, returning (exit status, stdout, stderr)"""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = cli.main(argv)
    return status, out.getvalue(), err.getvalue()

class TestRunConfig(unittest.TestCase):
    """Unit tests for kepler.cli.RunConfig"""

    def test_defaults(self):
        cfg = cli.RunConfig(command = 'figures')
        self.assertEqual((0.1, 0.3, 0.5, 0.7, 0.9), cfg.eps_list)
        self.assertEqual(1000, cfg.samples)
        self.assertEqual('csv', cfg.format)

    def test_validation(self):
        self.assertRaises(ValueError, cli.RunConfig, command = 'orbit')
        self.assertRaises(ValueError, cli.RunConfig, command = 'figures', samples = 1)
        self.assertRaises(ValueError, cli.RunConfig, command = 'propagate', dt = 0.0)
        self.assertRaises(ValueError, cli.RunConfig, command = 'figures', eps_list = (0.5, 1.0))
        self.assertRaises(ValueError, cli.RunConfig, command = 'check', eps_list = (0.995,))
        self.assertRaises(ValueError, cli.RunConfig, command = 'figures', format = 'png')

class TestCommands(unittest.TestCase):
    """Unit tests for the kepler subcommands"""

    def setUp(self):
        self.tempdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tempdir.cleanup()

    def test_figures(self):
        status, out, _ = run(['figures', '--eps', '0.1,0.5', '--samples', '50',
                              '--out', self.tempdir.name])
        self.assertEqual(0, status)
        self.assertEqual(6, len(out.splitlines()))
        self.assertTrue(os.path.exists(os.path.join(self.tempdir.name, 'time_law_0.5.csv')))

    def test_figures_svg(self):
        status, _, _ = run(['figures', '--eps', '0.2', '--samples', '20', '--format', 'svg',
                            '--out', self.tempdir.name])
        self.assertEqual(0, status)
        self.assertTrue(os.path.exists(os.path.join(self.tempdir.name, 'speed_0.2.svg')))

    def test_figures_usage_errors(self):
        status, _, err = run(['figures', '--eps', '1.5', '--out', self.tempdir.name])
        self.assertEqual(2, status)
        self.assertTrue('eps' in err)
        status, _, _ = run(['figures', '--eps', '0.995', '--out', self.tempdir.name])
        self.assertEqual(2, status)
        status, _, _ = run(['figures', '--out', os.path.join(self.tempdir.name, 'missing')])
        self.assertEqual(2, status)
        with self.assertRaises(SystemExit) as context:
            run(['figures', '--format', 'png'])
        self.assertEqual(2, context.exception.code)

    def test_propagate(self):
        path = os.path.join(self.tempdir.name, 'orbit.csv')
        v = math.sqrt(2 / 9 - 1 / 5)
        status, out, _ = run(['propagate', f'--state=9,0,0,0,{v!r},0', '--dt', '0.007', '--out', path])
        self.assertEqual(0, status)
        summary = dict(line.split() for line in out.splitlines())
        self.assertTrue(abs(float(summary['p']) - 1.8) < 1e-12)
        self.assertTrue(abs(float(summary['eps']) - 0.8) < 1e-12)
        self.assertTrue(abs(float(summary['period']) - 2 * math.pi * math.sqrt(125)) < 1e-9)
        self.assertTrue(float(summary['max_drift']) < 1e-6)
        self.assertTrue(float(summary['plane_residual']) < 1e-12)

        frame = pd.read_csv(path, float_precision = 'round_trip')
        self.assertEqual(['t', 'x', 'y', 'z', 'vx', 'vy', 'vz', 'A', 'B', 'C', 'h'], list(frame.columns))
        self.assertEqual(int(summary['steps']) + 1, len(frame))
        self.assertEqual(9.0, frame['x'][0])
        self.assertTrue(abs(frame['x'].iloc[-1] - 9) < 1e-3)

    def test_propagate_steps(self):
        path = os.path.join(self.tempdir.name, 'circle.csv')
        status, _, _ = run(['propagate', '--state', '1,0,0,0,1,0', '--dt', '0.01',
                            '--steps', '10', '--out', path])
        self.assertEqual(0, status)
        self.assertEqual(11, len(pd.read_csv(path)))

    def test_propagate_failures(self):
        path = os.path.join(self.tempdir.name, 'orbit.csv')
        status, _, err = run(['propagate', '--state', '1,0,0,0,2,0', '--out', path])
        self.assertEqual(1, status)
        self.assertTrue('UnboundOrbitError' in err)
        status, _, err = run(['propagate', '--state', '1,0,0,0.5,0,0', '--out', path])
        self.assertEqual(1, status)
        self.assertTrue('DegenerateOrbitError' in err)
        self.assertFalse(os.path.exists(path))

        unwritable = os.path.join(self.tempdir.name, 'missing', 'orbit.csv')
        status, _, _ = run(['propagate', '--state', '1,0,0,0,1,0', '--steps', '5',
                            '--out', unwritable])
        self.assertEqual(2, status)
        with self.assertRaises(SystemExit) as context:
            run(['propagate', '--state', '1,0,0'])
        self.assertEqual(2, context.exception.code)

    def test_planets(self):
        status, out, _ = run(['planets'])
        self.assertEqual(0, status)
        lines = out.splitlines()
        self.assertEqual(9, len(lines))
        self.assertEqual(['name', 'eccentricity', 'speed_ratio'], lines[0].split())
        self.assertEqual('Mercury', lines[1].split()[0])

    def test_planets_csv(self):
        status, out, _ = run(['planets', '--csv'])
        self.assertEqual(0, status)
        lines = out.splitlines()
        self.assertEqual('name,eccentricity,speed_ratio', lines[0])
        name, eps, _ = lines[3].split(',')
        self.assertEqual('Earth', name)
        self.assertEqual(0.01671022, float(eps))

class TestCheckCommand(unittest.TestCase):
    """Unit tests for kepler check, which runs the full suite"""

    def test_fail_inject(self):
        status, out, _ = run(['check', '--eps', '0.3,0.6', '--fail-inject'])
        self.assertEqual(1, status)
        lines = out.splitlines()
        self.assertTrue(any(line.startswith('FAIL') and 'closed_form' in line for line in lines))

    def test_check(self):
        status, out, _ = run(['check', '--eps', '0.3,0.6'])
        self.assertEqual(0, status)
        self.assertTrue(all(line.startswith('PASS') for line in out.splitlines()))

if __name__ == '__main__':
    unittest.main()
