# -*- coding: utf-8 -*-
"""Beatty-Fraenkel sequences floor((k + beta) / alpha).

Rational parameters (int or fractions.Fraction) are evaluated exactly;
floats go through numpy. Exact evaluation matters for rational alpha:
in binary floating point 2/3 is slightly below 2/3 and floor(-2 / alpha)
comes out as -4 instead of -3."""
import math
from fractions import Fraction

import numpy as np

import resources.lib.common as common

from .exceptions import BadAlphaError
from .freqset import FreqSet

__all__ = ['beatty_fraenkel', 'rational_beatty_family', 'reference_shift',
           'is_rational']


def is_rational(value):
    """True for exact rational input (int or Fraction)"""
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def beatty_fraenkel(alpha, beta, k_min, k_max):
    """{floor((k + beta) / alpha) : k_min <= k <= k_max} for 0 < alpha <= 1.
    The terms are strictly increasing in k, hence sorted and duplicate
    free."""
    _check_alpha(alpha)
    ks = range(k_min, k_max + 1)
    if is_rational(alpha) and is_rational(beta):
        values = [math.floor((k + Fraction(beta)) / Fraction(alpha))
                  for k in ks]
    else:
        values = np.floor((np.arange(k_min, k_max + 1) + float(beta))
                          / float(alpha)).astype(np.int64)
    return FreqSet(np.asarray(values, dtype=np.int64).reshape(-1, 1),
                   'beatty', max(abs(k_min), abs(k_max)),
                   np.arange(k_min, k_max + 1), dim=1)


def rational_beatty_family(alpha, k_min, k_max):
    """
    The distinct sequences floor((Z + beta) / alpha) for rational
    alpha = p/q and beta = j/q, j = 0..q-1.

    Two shifts describe the same set when their residues modulo q over one
    period agree; only the first such shift is kept.
    Returns a list of (beta, FreqSet) pairs.
    """
    if not is_rational(alpha):
        raise BadAlphaError('A rational alpha is required, got {}'
                            .format(alpha))
    alpha = Fraction(alpha)
    _check_alpha(alpha)
    period, step = alpha.numerator, alpha.denominator
    family = []
    seen = set()
    for j in range(step):
        beta = Fraction(j, step)
        residues = frozenset(math.floor((k + beta) / alpha) % step
                             for k in range(period))
        if residues in seen:
            continue
        seen.add(residues)
        family.append((beta, beatty_fraenkel(alpha, beta, k_min, k_max)))
    common.debug('Beatty-Fraenkel family for alpha = {}: {} sequences'
                 .format(alpha, len(family)))
    return family


@common.logdetails
def reference_shift(alpha, beta, P):
    """
    Shift c such that every block of P consecutive terms satisfies
    sum_{k=mP}^{(m+1)P-1} (floor((k + beta) / alpha) - (k + c) / alpha) = 0.

    Requires rational alpha = p/q. The block sums repeat with period p in
    k, so checking p consecutive blocks covers all m. Raises BadAlphaError
    when the blocks disagree (P not compatible with the period).
    """
    if not (is_rational(alpha) and is_rational(beta)):
        raise BadAlphaError('reference_shift needs rational alpha and beta')
    alpha, beta = Fraction(alpha), Fraction(beta)
    _check_alpha(alpha)
    if P < 1:
        raise ValueError('Block length must be positive')
    shifts = set()
    for m in range(alpha.numerator):
        block = range(m * P, (m + 1) * P)
        term_sum = sum(math.floor((k + beta) / alpha) for k in block)
        shifts.add((alpha * term_sum - sum(block)) / P)
    if len(shifts) != 1:
        raise BadAlphaError('No common shift for blocks of length {} '
                            '(alpha = {})'.format(P, alpha))
    return shifts.pop()


def _check_alpha(alpha):
    if not 0 < alpha <= 1:
        raise BadAlphaError('alpha must lie in (0, 1], got {}'.format(alpha))
