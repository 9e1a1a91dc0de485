# -*- coding: utf-8 -*-
"""
Riesz bound certificates and the formulas producing them.

Lindner's constant is only meaningful as a logarithm: (2B~)^(2P~) alone
overflows any double, so it is evaluated with mpmath, whose floats carry an
arbitrary precision exponent.
"""
import math
from functools import reduce
from operator import mul

import mpmath

import resources.lib.common as common
from resources.lib.linalg import as_mat, check_nonsingular

from .exceptions import OutOfRangeError

__all__ = ['BoundCert', 'kadec_function', 'kadec_bounds', 'tensor_bounds',
           'lindner_parameters', 'lindner_log_lower_bound', 'lindner_bounds',
           'transform_bounds', 'TRANSLATE_DOMAIN', 'TRANSLATE_FREQUENCY',
           'LINEAR_MAP']

TRANSLATE_DOMAIN = 'translate-domain'
TRANSLATE_FREQUENCY = 'translate-frequency'
LINEAR_MAP = 'linear-map'

LINDNER_PRECISION = 50


class BoundCert(object):
    """Lower and upper Riesz bounds with the formula that produced them"""
    def __init__(self, lower, upper, theorem, parameters=None,
                 log_lower=None, underflow=False):
        if not 0 <= lower <= upper:
            raise ValueError('Invalid Riesz bounds ({}, {})'
                             .format(lower, upper))
        self.lower = lower
        self.upper = upper
        self.log_lower = (log_lower if log_lower is not None
                          else (math.log(lower) if lower > 0 else -math.inf))
        self.theorem = theorem
        self.parameters = parameters or {}
        self.underflow = underflow

    @property
    def source(self):
        """Theorem tag and parameters"""
        return {'theorem': self.theorem, 'parameters': self.parameters}

    def to_dict(self):
        """JSON-ready representation; log_lower is always present"""
        return {'lower': common.json_number(self.lower),
                'upper': common.json_number(self.upper),
                'log_lower': common.json_number(self.log_lower),
                'underflow': self.underflow,
                'source': _json_ready(self.source)}

    def __repr__(self):
        return 'BoundCert({})'.format(self.to_dict())


def _json_ready(value):
    if isinstance(value, dict):
        return {key: _json_ready(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_ready(item) for item in value]
    if isinstance(value, (float, mpmath.mpf)):
        return common.json_number(value)
    return value


def kadec_function(L):
    """B(L) = 1 - cos(pi L) + sin(pi L)"""
    return 1.0 - math.cos(math.pi * L) + math.sin(math.pi * L)


def _check_quarter(L):
    if not 0 <= L < 0.25:
        raise OutOfRangeError('L must lie in [0, 1/4), got {}'.format(L))


def kadec_bounds(L):
    """B(L) and the Riesz bounds ((1 - B(L))^2, (1 + B(L))^2) for
    0 <= L < 1/4"""
    _check_quarter(L)
    value = kadec_function(L)
    cert = BoundCert((1.0 - value) ** 2, (1.0 + value) ** 2, 'kadec',
                     {'L': L, 'B': value})
    return value, cert


def tensor_bounds(Ls):
    """Products of the per-factor Kadec bounds. The factors are multiplied
    in sorted order, so permuting Ls does not change the result"""
    Ls = list(Ls)
    if not Ls:
        raise OutOfRangeError('At least one factor is required')
    for L in Ls:
        _check_quarter(L)
    lowers = sorted((1.0 - kadec_function(L)) ** 2 for L in Ls)
    uppers = sorted((1.0 + kadec_function(L)) ** 2 for L in Ls)
    return BoundCert(reduce(mul, lowers), reduce(mul, uppers),
                     'tensor-kadec', {'Ls': Ls})


@common.logdetails
def lindner_parameters(Bp, delta, L, P):
    """
    The auxiliary constants (B~, P~, delta~) as mpmath numbers:
    B~ = 3/2 + 2(3B + 1), P~ = P ceil((1/P) 2(4B + 2)^2 / (1/4 - L)) and
    delta~ = (1/4 - L) delta / 2.
    """
    with mpmath.workdps(LINDNER_PRECISION):
        Bp, delta, L = mpmath.mpf(Bp), mpmath.mpf(delta), mpmath.mpf(L)
        gap = mpmath.mpf(1) / 4 - L
        b_tilde = mpmath.mpf(3) / 2 + 2 * (3 * Bp + 1)
        p_tilde = P * mpmath.ceil(2 * (4 * Bp + 2) ** 2 / (gap * P))
        delta_tilde = gap * delta / 2
        return +b_tilde, +p_tilde, +delta_tilde


def lindner_log_lower_bound(Bp, delta, L, P):
    """
    Natural logarithm of Lindner's explicit lower Riesz bound
    log A = -20 pi^2 (2B~)^(2P~) / P~^2 + 240 (2B~)^P~ ln(delta~ / (9B~)).

    The powers are formed as exp(P~ ln 2B~) in mpmath, A itself is never
    materialized. Returns an mpmath.mpf.

    L and P describe the block condition
    (1/P)|sum_{k=mP}^{(m+1)P-1} delta_k| <= L. Some printings of the
    statement start the block at mN instead of mP; the block of length P
    starting at mP is meant, and that is what avdonin_condition_check
    measures.
    """
    if not Bp >= 0:
        raise OutOfRangeError('B must be non-negative, got {}'.format(Bp))
    if not delta > 0:
        raise OutOfRangeError('delta must be positive, got {}'.format(delta))
    _check_quarter(L)
    if int(P) != P or P < 1:
        raise OutOfRangeError('P must be a positive integer, got {}'
                              .format(P))
    b_tilde, p_tilde, delta_tilde = lindner_parameters(Bp, delta, L, int(P))
    with mpmath.workdps(LINDNER_PRECISION):
        ratio = delta_tilde / (9 * b_tilde)
        if not ratio < 1:
            raise OutOfRangeError('delta~ / (9 B~) = {} must be below 1'
                                  .format(ratio))
        log_power = p_tilde * mpmath.log(2 * b_tilde)
        log_bound = (-20 * mpmath.pi ** 2 * mpmath.exp(2 * log_power)
                     / p_tilde ** 2
                     + 240 * mpmath.exp(log_power) * mpmath.log(ratio))
        log_bound = +log_bound
    common.debug('Lindner log lower bound: B~ = {}, P~ = {}, log A = {}'
                 .format(b_tilde, p_tilde, mpmath.nstr(log_bound, 12)))
    return log_bound


def lindner_bounds(Bp, delta, L, P):
    """Lindner's lower bound as a certificate. The constant underflows every
    double for all admissible parameters, so lower is 0.0 with the underflow
    flag set whenever exp(log A) is not a normal double. No explicit upper
    bound is provided by the formula"""
    log_bound = lindner_log_lower_bound(Bp, delta, L, P)
    lower = float(mpmath.exp(log_bound)) if log_bound > -708 else 0.0
    underflow = lower < 2.2250738585072014e-308
    return BoundCert(0.0 if underflow else lower, math.inf, 'lindner',
                     {'B': Bp, 'delta': delta, 'L': L, 'P': P},
                     log_lower=log_bound, underflow=underflow)


def transform_bounds(cert, op, A=None):
    """
    Riesz bounds under domain and frequency changes: translations keep the
    bounds, a linear change of variables by A divides both by |det A|.
    """
    if op in (TRANSLATE_DOMAIN, TRANSLATE_FREQUENCY):
        return cert
    if op != LINEAR_MAP:
        raise ValueError('Unknown bound transform {}'.format(op))
    volume = abs(check_nonsingular(as_mat(A)))
    return BoundCert(cert.lower / volume, cert.upper / volume,
                     cert.theorem,
                     dict(cert.parameters, transform=op, det=volume),
                     log_lower=cert.log_lower - math.log(volume),
                     underflow=cert.underflow)
