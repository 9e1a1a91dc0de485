# -*- coding: utf-8 -*-
"""Generator rules for the constructed frequency sets"""
import math

import numpy as np

from resources.lib.lattice import FreqSet, FrequencyRule
from resources.lib.linalg import as_mat, inf_norm, inv

from .constructions import (lift_frequencies, rectangular_construction,
                            rounded_dual_construction,
                            spectral_norm_construction, tensor_product,
                            check_triangular_structure)
from .sequences import PerturbedSequence

__all__ = ['RoundedDualRule', 'RectangularRule', 'LiftedRule',
           'SpectralNormRule', 'TensorRule', 'PerturbedRule']


class RoundedDualRule(FrequencyRule):
    """r(H^-T Z^d) for H lower triangular with diagonals in (0,1]"""
    name = 'rounded-dual'

    def __init__(self, H):
        self.H = as_mat(H)
        check_triangular_structure(self.H)
        super(RoundedDualRule, self).__init__(self.H.dim)
        # (H^-T)^-1 = H^T
        self._inverse_norm = inf_norm(self.H.T)

    def build(self, N):
        return rounded_dual_construction(self.H, N)

    def index_radius_for_window(self, radius):
        return int(math.ceil(self._inverse_norm * (radius + 0.5)))

    def describe(self):
        return {'rule': self.name, 'H': self.H.tolist()}


class RectangularRule(FrequencyRule):
    """r(Z/a_1 + delta_1) x ... x r(Z/a_d + delta_d)"""
    name = 'rectangular'

    def __init__(self, diagonals, offsets=None):
        self.diagonals = [float(value) for value in diagonals]
        self.offsets = ([0.0] * len(self.diagonals) if offsets is None
                        else [float(value) for value in offsets])
        super(RectangularRule, self).__init__(len(self.diagonals))
        # Validates the diagonals once up front
        rectangular_construction(self.diagonals, self.offsets, 0)

    def build(self, N):
        return rectangular_construction(self.diagonals, self.offsets, N)

    def index_radius_for_window(self, radius):
        # |k/a + delta| <= r + 1/2 implies |k| <= a (r + 1/2 + |delta|)
        return int(max(math.ceil(diagonal * (radius + 0.5 + abs(offset)))
                       for diagonal, offset in zip(self.diagonals,
                                                   self.offsets)))

    def describe(self):
        return {'rule': self.name, 'diagonals': self.diagonals,
                'offsets': self.offsets}


class LiftedRule(FrequencyRule):
    """B R^T C for the integer set C of a base rule"""
    name = 'lifted'

    def __init__(self, base_rule, R, B, provenance='lifted'):
        self.base_rule = base_rule
        self.R = as_mat(R)
        self.B = as_mat(B)
        super(LiftedRule, self).__init__(self.B.dim)
        self.provenance = provenance
        self._inverse_norm = inf_norm(inv(self.B @ self.R.T))

    def build(self, N):
        return lift_frequencies(self.base_rule.build(N), self.R, self.B,
                                self.provenance)

    def index_radius_for_window(self, radius):
        return self.base_rule.index_radius_for_window(
            self._inverse_norm * radius)

    def describe(self):
        return {'rule': self.name, 'base': self.base_rule.describe(),
                'R': self.R.tolist(), 'B': self.B.tolist()}


class SpectralNormRule(FrequencyRule):
    """r((B^T A)^-T Z^d) lifted by B, under the spectral norm condition"""
    name = 'spectral-norm'

    def __init__(self, A, B=None):
        self.A = as_mat(A)
        self.B = None if B is None else as_mat(B)
        super(SpectralNormRule, self).__init__(self.A.dim)
        M = self.A if self.B is None else self.B.T @ self.A
        self._lift_norm = 1.0 if self.B is None else inf_norm(inv(self.B))
        # (M^-T)^-1 = M^T
        self._inverse_norm = inf_norm(M.T)

    def build(self, N):
        return spectral_norm_construction(self.A, N, self.B)

    def index_radius_for_window(self, radius):
        return int(math.ceil(self._inverse_norm
                             * (self._lift_norm * radius + 0.5)))

    def describe(self):
        return {'rule': self.name, 'A': self.A.tolist(),
                'B': None if self.B is None else self.B.tolist()}


class TensorRule(FrequencyRule):
    """Cartesian product of one-dimensional rules"""
    name = 'tensor'

    def __init__(self, factors):
        self.factors = list(factors)
        if any(factor.dim != 1 for factor in self.factors):
            raise ValueError('Tensor factors must be one-dimensional')
        super(TensorRule, self).__init__(len(self.factors))

    def build(self, N):
        return tensor_product([factor.build(N) for factor in self.factors])

    def index_radius_for_window(self, radius):
        return max(factor.index_radius_for_window(radius)
                   for factor in self.factors)

    def describe(self):
        return {'rule': self.name,
                'factors': [factor.describe() for factor in self.factors]}


class PerturbedRule(FrequencyRule):
    """
    One-dimensional perturbed integers gamma_n = n + delta(n).

    delta receives an integer index array and returns the perturbations;
    bound is sup |delta| over all of Z and decides how far the index window
    has to reach.
    """
    name = 'perturbed'

    def __init__(self, delta, bound, label='custom'):
        super(PerturbedRule, self).__init__(1)
        self.delta = delta
        self.bound = float(bound)
        self.label = label

    def sequence(self, n_min, n_max):
        """The perturbed sequence over n_min <= n <= n_max"""
        return PerturbedSequence.from_function(self.delta, n_min, n_max)

    def build(self, N):
        sequence = self.sequence(-N, N)
        return FreqSet(sequence.values, 'perturbed', N, sequence.indices,
                       dim=1)

    def index_radius_for_window(self, radius):
        return int(math.ceil(radius + self.bound))

    def describe(self):
        return {'rule': self.name, 'delta': self.label, 'bound': self.bound}

    @classmethod
    def constant(cls, shift):
        """gamma_n = n + shift"""
        return cls(lambda n: np.full(len(n), float(shift)), abs(shift),
                   'constant {}'.format(shift))

    @classmethod
    def alternating(cls, amplitude):
        """gamma_n = n + amplitude (-1)^n"""
        return cls(lambda n: amplitude * (1.0 - 2.0 * (n % 2)),
                   abs(amplitude), 'alternating {}'.format(amplitude))

    @classmethod
    def sine(cls, amplitude):
        """gamma_n = n + amplitude sin(n)"""
        return cls(lambda n: amplitude * np.sin(n), abs(amplitude),
                   'sine {}'.format(amplitude))
