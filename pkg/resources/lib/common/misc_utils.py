# -*- coding: utf-8 -*-
"""Miscellanneous utility functions"""
import math
import threading
import traceback
from concurrent.futures import ThreadPoolExecutor
from functools import wraps
from time import perf_counter

from resources.lib.globals import g
from .logging import debug, error

__all__ = ['execute_tasks', 'json_number', 'format_float',
           'format_traceback', 'time_execution', 'log_time_trace']


def execute_tasks(tasks, task_handler, **kwargs):
    """Run all tasks through task_handler on at most g.THREADS workers.
    Additional kwargs will be passed into task_handler on each invocation.
    Returns the results in the order of tasks; the first exception raised
    by a task is re-raised after all tasks have finished."""
    tasks = list(tasks)
    workers = max(1, min(g.THREADS, len(tasks)))
    if workers == 1:
        return [task_handler(task, **kwargs) for task in tasks]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(task_handler, task, **kwargs)
                   for task in tasks]
    results = []
    errors = []
    for task, future in zip(tasks, futures):
        exc = future.exception()
        if exc is not None:
            error('Task {} failed: {}: {}'
                  .format(task, type(exc).__name__, exc))
            errors.append(exc)
        else:
            results.append(future.result())
    if errors:
        raise errors[0]
    return results


def json_number(value):
    """Convert a numeric value into something json.dumps emits portably.
    Non-finite values become strings, extended-range values (mpmath) become
    floats when representable and strings otherwise."""
    try:
        as_float = float(value)
    except OverflowError:
        return str(value)
    if math.isfinite(as_float):
        return as_float
    if math.isnan(as_float):
        return 'nan'
    if str(value).lstrip('+-') in ('inf', 'infinity', 'Infinity'):
        return '-inf' if as_float < 0 else 'inf'
    # Finite in extended precision but outside the float range
    return str(value)


def format_float(value):
    """Text of a finite float with 17 significant digits. The text always
    carries a decimal point or an exponent, so it reads back as a float"""
    value = float(value)
    if not math.isfinite(value):
        raise ValueError('Out of range float values are not JSON: {}'
                         .format(value))
    text = format(value, '.17g')
    return text if '.' in text or 'e' in text else text + '.0'


def format_traceback():
    """Formatted traceback of the exception currently being handled"""
    return traceback.format_exc()


def time_execution(immediate):
    """A decorator that wraps a function call and times its execution.
    Only calls on the main thread are traced: the trace and its nesting
    level live on g, and calls made by execute_tasks workers run untimed"""
    # pylint: disable=missing-docstring
    def time_execution_decorator(func):
        @wraps(func)
        def timing_wrapper(*args, **kwargs):
            if threading.current_thread() is not threading.main_thread():
                return func(*args, **kwargs)
            g.add_time_trace_level()
            start = perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                if g.TIME_TRACE_ENABLED:
                    execution_time = int((perf_counter() - start) * 1000)
                    if immediate:
                        debug('Call to {} took {}ms'
                              .format(func.__name__, execution_time))
                    else:
                        g.TIME_TRACE.append([func.__name__, execution_time,
                                             g.time_trace_level])
                g.remove_time_trace_level()
        return timing_wrapper
    return time_execution_decorator


def log_time_trace():
    """Write the time tracing info to the debug log"""
    if not g.TIME_TRACE_ENABLED:
        return

    time_trace = ['Execution time info for this run:\n']
    g.TIME_TRACE.reverse()
    for trace in g.TIME_TRACE:
        time_trace.append(' ' * max(trace[2], 0))
        time_trace.append(format(trace[0], '<30'))
        time_trace.append('{:>5} ms\n'.format(trace[1]))
    debug(''.join(time_trace))
    g.reset_time_trace()
