# -*- coding: utf-8 -*-
"""Frequency set generator rules.

A rule builds the set truncated to an index box |n_k| <= N and knows which
index radius is enough to cover an image window [-r, r]^d, so densities
and truncation ladders can ask for windows instead of index boxes."""
import math

from resources.lib.linalg import as_mat, inv, inf_norm

from .beatty import beatty_fraenkel
from .rounding import lattice_points, rounded_lattice

__all__ = ['FrequencyRule', 'LatticeRule', 'BeattyRule']


class FrequencyRule(object):
    """Base class for deterministic frequency set generators"""
    name = 'rule'

    def __init__(self, dim):
        self.dim = dim

    def build(self, N):
        """The set generated by the index box |n_k| <= N"""
        raise NotImplementedError

    def index_radius_for_window(self, radius):
        """Smallest index radius N whose set contains every point of the
        full (untruncated) set inside [-radius, radius]^d"""
        raise NotImplementedError

    def window(self, radius):
        """Points of the generated set inside the closed cube
        [-radius, radius]^d"""
        return self.build(self.index_radius_for_window(radius)).window(radius)

    def describe(self):
        """JSON-ready description of the rule and its parameters"""
        return {'rule': self.name}

    def __repr__(self):
        return '{}({})'.format(self.__class__.__name__, self.describe())


class LatticeRule(FrequencyRule):
    """M Z^d, optionally followed by the rounding map"""
    name = 'lattice'

    def __init__(self, M, rounded=False, provenance='explicit'):
        self.M = as_mat(M)
        super(LatticeRule, self).__init__(self.M.dim)
        self.rounded = rounded
        self.provenance = provenance
        self._inverse_norm = inf_norm(inv(self.M))

    def build(self, N):
        if self.rounded:
            return rounded_lattice(self.M, N, self.provenance)
        return lattice_points(self.M, N, self.provenance)

    def index_radius_for_window(self, radius):
        # |M n| <= r + 1/2 implies |n| <= ||M^{-1}||_inf (r + 1/2)
        return int(math.ceil(self._inverse_norm * (radius + 0.5)))

    def describe(self):
        return {'rule': self.name, 'M': self.M.tolist(),
                'rounded': self.rounded}


class BeattyRule(FrequencyRule):
    """floor((Z + beta) / alpha), a Riesz basis candidate on [0, alpha]"""
    name = 'beatty'

    def __init__(self, alpha, beta=0):
        super(BeattyRule, self).__init__(1)
        self.alpha = alpha
        self.beta = beta
        # Validates alpha
        beatty_fraenkel(alpha, beta, 0, 0)

    def build(self, N):
        return beatty_fraenkel(self.alpha, self.beta, -N, N)

    def index_radius_for_window(self, radius):
        # |floor((k + beta) / alpha)| <= r forces |k| <= alpha (r + 1) + |beta|
        return int(math.ceil(float(self.alpha) * (radius + 1)
                             + abs(float(self.beta))))

    def describe(self):
        return {'rule': self.name, 'alpha': str(self.alpha),
                'beta': str(self.beta)}
