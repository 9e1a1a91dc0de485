# -*- coding: utf-8 -*-
"""Command routing"""
import resources.lib.common as common
from resources.lib.bounds import BoundsError
from resources.lib.construct import ConstructionError
from resources.lib.globals import g
from resources.lib.lattice import LatticeError
from resources.lib.linalg import LinalgError
from resources.lib.verify import VerificationError

# Errors of a run that end up in the report instead of aborting it
EMBEDDED_ERRORS = (LinalgError, LatticeError, ConstructionError, BoundsError,
                   VerificationError, ValueError)


class InvalidCommandError(Exception):
    """The requested command is invalid and could not be routed"""
    pass


def execute(executor_type, command, config):
    """Execute a command on a run configuration and return its report.
    Library errors raised along the way are embedded into the report.
    Tolerance overrides of the config hold for this run only"""
    if command not in g.COMMANDS:
        raise InvalidCommandError('Unknown command {}'.format(command))
    instance = executor_type(config)
    try:
        executor = instance.__getattribute__(command.replace('-', '_'))
    except AttributeError:
        raise InvalidCommandError('Unknown command {}'.format(command))
    common.debug('Invoking command executor {}'.format(executor.__name__))
    with g.tolerance_overrides(config.tolerances):
        try:
            executor()
        except EMBEDDED_ERRORS as exc:
            common.debug(common.format_traceback())
            instance.report.add_error(exc)
    return instance.report
