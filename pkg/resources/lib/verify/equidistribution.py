# -*- coding: utf-8 -*-
"""Block averages of fractional parts of (k + beta) / alpha"""
from fractions import Fraction

import numpy as np

import resources.lib.common as common
from resources.lib.lattice import is_rational

__all__ = ['EquidistReport', 'block_deviation', 'equidistribution_check']


class EquidistReport(object):
    """Largest deviation of a block average of fractional parts from 1/2"""
    def __init__(self, P, max_deviation, epsilon, worst_block):
        self.P = P
        self.max_deviation = max_deviation
        self.epsilon = epsilon
        self.worst_block = worst_block

    @property
    def satisfied(self):
        """max_deviation < epsilon"""
        return self.max_deviation < self.epsilon

    def to_dict(self):
        """JSON-ready representation"""
        return {'P': self.P,
                'max_deviation': self.max_deviation,
                'epsilon': self.epsilon,
                'satisfied': self.satisfied,
                'worst_block': self.worst_block}


def _fractional_parts(alpha, beta, ks):
    if is_rational(alpha) and is_rational(beta):
        # (k + b) / a with a = p/q, b = s/t is ((k t + s) q) / (p t)
        alpha, beta = Fraction(alpha), Fraction(beta)
        numerators = ((ks * beta.denominator + beta.numerator)
                      * alpha.denominator)
        denominator = alpha.numerator * beta.denominator
        return np.mod(numerators, denominator) / float(denominator)
    values = (ks + float(beta)) / float(alpha)
    return values - np.floor(values)


def block_deviation(alpha, beta, P, m):
    """|(1/P) sum_{k=mP}^{(m+1)P-1} frac((k + beta) / alpha) - 1/2|"""
    ks = np.arange(m * P, (m + 1) * P, dtype=np.int64)
    return float(abs(np.mean(_fractional_parts(alpha, beta, ks)) - 0.5))


def equidistribution_check(alpha, betas, P, m_range, epsilon):
    """Largest block deviation over m_range[0] <= m <= m_range[1] and the
    given shifts. Rational alpha and beta are evaluated exactly"""
    if not alpha > 0:
        raise ValueError('alpha must be positive, got {}'.format(alpha))
    if P < 1:
        raise ValueError('Block length must be at least 1')
    m_min, m_max = m_range
    worst = None
    max_deviation = 0.0
    for beta in betas:
        for m in range(m_min, m_max + 1):
            deviation = block_deviation(alpha, beta, P, m)
            if worst is None or deviation > max_deviation:
                max_deviation = deviation
                worst = {'beta': float(beta), 'm': m}
    report = EquidistReport(P, max_deviation, epsilon, worst)
    common.debug('Equidistribution alpha = {}, P = {}: max deviation {}'
                 .format(alpha, P, max_deviation))
    return report
