# -*- coding: utf-8 -*-
"""Helper functions for logging"""
import logging
from functools import wraps

from resources.lib.globals import g

__all__ = ['LOGGER', 'LOGDEBUG', 'LOGINFO', 'LOGWARNING', 'LOGERROR',
           'setup_logging', 'log', 'debug', 'info', 'warn', 'error',
           'logdetails']

LOGGER = logging.getLogger(g.PROJECT_ID)

LOGDEBUG = logging.DEBUG
LOGINFO = logging.INFO
LOGWARNING = logging.WARNING
LOGERROR = logging.ERROR


def setup_logging(level=None):
    """Attach a stream handler to the project logger (CLI runs only)"""
    if not LOGGER.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('%(levelname)s %(message)s'))
        LOGGER.addHandler(handler)
    LOGGER.setLevel(level or g.LOG_LEVEL)


def log(msg, exc=None, level=LOGDEBUG):
    """Log a message to the project logger.
    If msg contains a format placeholder for exc and exc is not none,
    exc will be formatted into the message."""
    msg = msg.format(exc=exc) if exc is not None and '{exc}' in msg else msg
    LOGGER.log(level,
               '[{identifier} ({command})] {msg}'
               .format(identifier=g.PROJECT_ID, command=g.COMMAND or 'lib',
                       msg=msg))


def debug(msg='{exc}', exc=None):
    """Log a debug message."""
    log(msg, exc, LOGDEBUG)


def info(msg='{exc}', exc=None):
    """Log an info message."""
    log(msg, exc, LOGINFO)


def warn(msg='{exc}', exc=None):
    """Log a warning message."""
    log(msg, exc, LOGWARNING)


def error(msg='{exc}', exc=None):
    """Log an error message."""
    log(msg, exc, LOGERROR)


def logdetails(func):
    """
    Log decorator that is used to annotate functions & output the call and
    its result to the debug log

    Matrix payloads are not logged, only their presence.
    """
    name = func.__qualname__

    @wraps(func)
    def wrapped(*args, **kwargs):
        """Wrapper function to maintain correct stack traces"""
        arguments = [':{} = {}:'.format(key, value)
                     for key, value in sorted(kwargs.items())
                     if key not in ['A', 'B', 'M', 'H', 'R']]
        if arguments:
            log('{func} called with arguments {args}'
                .format(func=name, args=''.join(arguments)))
        else:
            log('{func} called'.format(func=name))
        result = func(*args, **kwargs)
        log('{func} return {result}'.format(func=name, result=result))
        return result

    return wrapped
