# -*- coding: utf-8 -*-
"""Global constants and run configuration.
Everything that is to be globally accessible must be defined in this module
and initialized in GlobalVariables.init_globals.
Library functions read their default tolerances from here, so the values set
in reset_defaults are valid even when init_globals was never called (e.g.
when the package is used as a library or from the tests)."""
import argparse
import multiprocessing
import os
from contextlib import contextmanager


class GlobalVariables(object):
    """Encapsulation for global variables and numeric defaults"""
    # pylint: disable=attribute-defined-outside-init
    # pylint: disable=invalid-name, too-many-instance-attributes

    PROJECT_ID = 'paralattice'
    VERSION = '1.0.0'

    CMD_CONSTRUCT = 'construct'
    CMD_VERIFY = 'verify'
    CMD_CERTIFY = 'certify'
    CMD_DECOMPOSE = 'decompose'
    CMD_BOUNDS = 'bounds'
    CMD_EMIT_POINTS = 'emit-points'
    COMMANDS = [CMD_CONSTRUCT, CMD_VERIFY, CMD_CERTIFY, CMD_DECOMPOSE,
                CMD_BOUNDS, CMD_EMIT_POINTS]

    ENV_THREADS = 'PARALATTICE_THREADS'
    ENV_LOGLEVEL = 'PARALATTICE_LOGLEVEL'

    # Tolerance keys accepted in the "tolerances" object of a run config
    TOLERANCE_KEYS = {
        'eps_num': 'EPS_NUM',
        'orthogonality': 'ORTHOGONALITY_TOL',
        'density': 'DENSITY_TOL',
        'eig': 'EIG_TOL',
        'ladder_stability': 'LADDER_STABILITY',
    }

    def __init__(self):
        self.reset_defaults()

    def reset_defaults(self):
        """Install the default numeric constants and an idle run state"""
        self.EPS_NUM = 1e-9
        self.EPS_SING_FACTOR = 1e-12
        self.POWER_ITERATION_CAP = 10000
        self.SPECTRAL_NORM_RTOL = 1e-10
        self.TAYLOR_CUTOFF = 1e-8
        self.GRAM_SIZE_CAP = 5000
        self.DENSE_EIG_LIMIT = 2000
        self.EIG_TOL = 1e-8
        self.LADDER_STABILITY = 0.01
        self.ORTHOGONALITY_TOL = 1e-9
        self.DENSITY_TOL = 0.05
        self.THREADS = multiprocessing.cpu_count() or 1
        self.COMMAND = ''
        self.CONFIG_PATH = None
        self.OUT_PATH = None
        self.POINTS_PATH = None
        self.LOG_LEVEL = 'WARNING'
        self.TIME_TRACE_ENABLED = False
        self.reset_time_trace()

    def init_globals(self, argv, environ=None):
        """Initialize the run state from the command line and the environment.
        Needs to be called at the start of each CLI invocation!"""
        environ = os.environ if environ is None else environ
        self.reset_defaults()
        args = _argument_parser().parse_args(argv[1:])
        self.COMMAND = args.command
        self.CONFIG_PATH = args.config
        self.OUT_PATH = args.out
        self.POINTS_PATH = args.points
        self.TIME_TRACE_ENABLED = args.time_trace
        self.LOG_LEVEL = ('DEBUG' if args.verbose
                          else environ.get(self.ENV_LOGLEVEL, 'WARNING'))
        self.THREADS = _read_thread_cap(environ.get(self.ENV_THREADS),
                                        self.THREADS)

    def apply_tolerances(self, overrides):
        """Install tolerance overrides from a run config"""
        for key, value in (overrides or {}).items():
            setattr(self, self.TOLERANCE_KEYS[key], float(value))

    @contextmanager
    def tolerance_overrides(self, overrides):
        """Apply tolerance overrides for the duration of a run and restore
        the previous values afterwards, also when the run fails"""
        names = [self.TOLERANCE_KEYS[key] for key in (overrides or {})]
        saved = {name: getattr(self, name) for name in names}
        try:
            self.apply_tolerances(overrides)
            yield
        finally:
            for name, value in saved.items():
                setattr(self, name, value)

    def reset_time_trace(self):
        """Reset current time trace info"""
        self.TIME_TRACE = []
        self.time_trace_level = -2

    def add_time_trace_level(self):
        """Add a level to the time trace"""
        self.time_trace_level += 2

    def remove_time_trace_level(self):
        """Remove a level from the time trace"""
        self.time_trace_level -= 2


def _argument_parser():
    parser = argparse.ArgumentParser(
        prog=GlobalVariables.PROJECT_ID,
        description='Exponential Riesz bases on parallelepipeds: '
                    'constructions, bounds and numerical certification')
    parser.add_argument('command', choices=GlobalVariables.COMMANDS)
    parser.add_argument('--config', required=True,
                        help='Path to the JSON run configuration')
    parser.add_argument('--out', default=None,
                        help='Write the JSON report to this file')
    parser.add_argument('--points', default=None,
                        help='Write the CSV point file to this file')
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--time-trace', action='store_true')
    return parser


def _read_thread_cap(value, default):
    if value is None:
        return default
    try:
        threads = int(value)
    except ValueError:
        return default
    return threads if threads > 0 else default


# pylint: disable=invalid-name
g = GlobalVariables()
