# -*- coding: utf-8 -*-
"""Run reports and their verdicts"""
import json
from fractions import Fraction

import mpmath
import numpy as np

import resources.lib.common as common
from resources.lib.globals import g

__all__ = ['CERTIFIED_ORTHOGONAL', 'CERTIFIED_RIESZ', 'EVIDENCE_ONLY',
           'REJECTED', 'UNKNOWN', 'VERDICTS', 'SUCCESS_VERDICTS', 'Report',
           'json_ready', 'error_envelope', 'dumps']

CERTIFIED_ORTHOGONAL = 'certified-orthogonal'
CERTIFIED_RIESZ = 'certified-riesz-by-theorem'
EVIDENCE_ONLY = 'evidence-only'
REJECTED = 'rejected'
UNKNOWN = 'unknown'
VERDICTS = (CERTIFIED_ORTHOGONAL, CERTIFIED_RIESZ, EVIDENCE_ONLY, REJECTED,
            UNKNOWN)
SUCCESS_VERDICTS = (CERTIFIED_ORTHOGONAL, CERTIFIED_RIESZ, EVIDENCE_ONLY)


def error_envelope(exc):
    """Error class name and message of an exception"""
    return {'error': exc.__class__.__name__, 'message': str(exc)}


class Report(object):
    """
    Outcome of one command run.

    Sections are filled in by the command executors; the verdict starts out
    as unknown and an embedded error always turns it into rejected.
    """
    def __init__(self, command, config=None):
        self.command = command
        self.config = config
        self.sections = {}
        self.conditions = []
        self.bounds = []
        self.errors = []
        self.verdict = UNKNOWN
        self.theorem = None

    def set_verdict(self, verdict, theorem=None):
        """Set the verdict and the tag of the theorem it rests on"""
        if verdict not in VERDICTS:
            raise ValueError('Unknown verdict {}'.format(verdict))
        self.verdict = verdict
        self.theorem = theorem
        common.info('Verdict: {}{}'.format(
            verdict, ' ({})'.format(theorem) if theorem else ''))

    def add_section(self, name, value):
        """Attach a named result (objects with to_dict are converted)"""
        self.sections[name] = _as_dict(value)

    def add_condition(self, condition):
        """Attach a condition report"""
        self.conditions.append(_as_dict(condition))

    def add_bound(self, cert):
        """Attach a bound certificate"""
        self.bounds.append(_as_dict(cert))

    def add_error(self, exc):
        """Embed a downstream error and reject the run"""
        common.error('{} failed: {{exc}}'.format(self.command), exc)
        self.errors.append(error_envelope(exc))
        self.verdict = REJECTED

    @property
    def exit_code(self):
        """0 for the certified and evidence-only verdicts, 1 otherwise"""
        return 0 if self.verdict in SUCCESS_VERDICTS else 1

    def to_dict(self):
        """JSON-ready representation"""
        content = dict(self.sections)
        content.update({
            'command': self.command,
            'version': g.VERSION,
            'config': self.config,
            'conditions': self.conditions,
            'bounds': self.bounds,
            'errors': self.errors,
            'verdict': self.verdict,
            'theorem': self.theorem,
        })
        return json_ready(content)

    def to_json(self):
        """Deterministic JSON text: sorted keys, floats with 17 significant
        digits, non-finite values as strings"""
        return dumps(self.to_dict()) + '\n'


def _as_dict(value):
    return value.to_dict() if hasattr(value, 'to_dict') else value


def json_ready(value):
    """Recursively convert numpy, mpmath and Fraction values into plain
    JSON types"""
    # pylint: disable=too-many-return-statements
    if hasattr(value, 'to_dict'):
        return json_ready(value.to_dict())
    if isinstance(value, dict):
        return {str(key): json_ready(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(item) for item in value]
    if isinstance(value, np.ndarray):
        return json_ready(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return (value.numerator if value.denominator == 1
                else str(value))
    if isinstance(value, (float, np.floating, mpmath.mpf)):
        return common.json_number(value)
    return value


def dumps(value, indent=2):
    """JSON text of a json_ready value laid out like json.dumps with
    sort_keys and indent, floats written by common.format_float"""
    return _encode(value, indent, 0)


def _encode(value, indent, level):
    if isinstance(value, float):
        return common.format_float(value)
    if isinstance(value, dict):
        items = ['{}: {}'.format(json.dumps(str(key)),
                                 _encode(value[key], indent, level + 1))
                 for key in sorted(value)]
        return _block('{', items, '}', indent, level)
    if isinstance(value, (list, tuple)):
        items = [_encode(item, indent, level + 1) for item in value]
        return _block('[', items, ']', indent, level)
    return json.dumps(value)


def _block(opening, items, closing, indent, level):
    if not items:
        return opening + closing
    inner = '\n' + ' ' * (indent * (level + 1))
    outer = '\n' + ' ' * (indent * level)
    return opening + inner + (',' + inner).join(items) + outer + closing
