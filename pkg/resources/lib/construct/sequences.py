# -*- coding: utf-8 -*-
"""
Perturbed sequences and the perturbation conditions checked on them.

All checks run on a finite index window. The conditions they stand for
quantify over all of Z (or Z^d), so every report carries the window it was
verified on and never speaks for the infinite set.
"""
import math

import numpy as np

import resources.lib.common as common
from resources.lib.linalg import as_mat, inverse_transpose

from .exceptions import IncompleteBlockError

__all__ = ['QUARTER', 'BASE_INTEGERS', 'BASE_DUAL_LATTICE',
           'PerturbedSequence', 'ConditionReport', 'bailey_threshold',
           'kadec_condition_check', 'avdonin_condition_check',
           'bailey_condition_check', 'rounding_bound_check']

QUARTER = 0.25
BASE_INTEGERS = 'integers'
BASE_DUAL_LATTICE = 'dual-lattice'


def bailey_threshold(dim):
    """ln 2 / (pi d)"""
    return math.log(2.0) / (math.pi * dim)


class PerturbedSequence(object):
    """
    Values gamma_n indexed by n in a window, next to their reference points
    (n itself, or A^-T n) and the deltas gamma_n - reference_n.
    One-dimensional sequences are stored with shape (m, 1).
    """
    def __init__(self, indices, values, base_points=None, deltas=None,
                 base=BASE_INTEGERS):
        self.indices = _as_rows(np.asarray(indices, dtype=np.int64))
        self.values = _as_rows(np.asarray(values, dtype=float))
        self.base = base
        self.base_points = (self.indices.astype(float) if base_points is None
                            else _as_rows(np.asarray(base_points,
                                                     dtype=float)))
        self.deltas = (self.values - self.base_points if deltas is None
                       else _as_rows(np.asarray(deltas, dtype=float)))
        if not (len(self.indices) == len(self.values) == len(self.deltas)
                and self.values.shape == self.base_points.shape):
            raise ValueError('Inconsistent perturbed sequence shapes')
        if not len(self.indices):
            raise ValueError('A perturbed sequence needs a non-empty window')
        if self.dim == 1 and np.any(np.diff(self.indices[:, 0]) != 1):
            raise ValueError('Indices must be contiguous and increasing')

    @classmethod
    def from_deltas(cls, deltas, n_min=0):
        """gamma_n = n + delta_n for n = n_min, n_min + 1, ..."""
        deltas = np.asarray(deltas, dtype=float)
        indices = np.arange(n_min, n_min + len(deltas))
        return cls(indices, indices + deltas, deltas=deltas)

    @classmethod
    def from_function(cls, delta, n_min, n_max):
        """gamma_n = n + delta(n) for n_min <= n <= n_max; delta receives the
        integer index array"""
        indices = np.arange(n_min, n_max + 1)
        return cls.from_deltas(np.asarray(delta(indices), dtype=float),
                               n_min)

    @classmethod
    def from_freqset(cls, freqs, A=None):
        """Points of a generated set against the dual lattice A^-T n of
        their generator indices (n itself when A is omitted)"""
        if freqs.indices is None:
            raise ValueError('The frequency set has no generator indices')
        if A is None:
            return cls(freqs.indices, freqs.points)
        base_points = freqs.indices @ inverse_transpose(A).array.T
        return cls(freqs.indices, freqs.points, base_points,
                   base=BASE_DUAL_LATTICE)

    @property
    def dim(self):
        """Dimension of the values"""
        return self.values.shape[1]

    @property
    def window(self):
        """First and last index of a one-dimensional window"""
        return [int(self.indices[0, 0]), int(self.indices[-1, 0])]

    def __len__(self):
        return len(self.indices)


def _as_rows(array):
    return array.reshape(-1, 1) if array.ndim == 1 else array


class ConditionReport(object):
    """Outcome of a condition check: the verdict, the signed distance to
    the threshold and the measured parameters"""
    def __init__(self, name, satisfied, margin, parameters):
        self.name = name
        self.satisfied = bool(satisfied)
        self.margin = margin
        self.parameters = parameters

    def to_dict(self):
        """JSON-ready representation"""
        parameters = {key: (common.json_number(value)
                            if isinstance(value, float) else value)
                      for key, value in self.parameters.items()}
        parameters['window_verified'] = True
        return {'condition': self.name,
                'satisfied': self.satisfied,
                'margin': common.json_number(self.margin),
                'parameters': parameters}

    def __repr__(self):
        return 'ConditionReport({})'.format(self.to_dict())


def kadec_condition_check(sequence):
    """sup |gamma_n - n| = L < 1/4 on the window, strictly"""
    L = float(np.max(np.abs(sequence.deltas)))
    report = ConditionReport('kadec', L < QUARTER, QUARTER - L,
                             {'L': L, 'window': sequence.window,
                              'points': len(sequence)})
    common.debug('Kadec check: L = {}, satisfied = {}'
                 .format(L, report.satisfied))
    return report


def avdonin_condition_check(sequence, P, sep_min):
    """
    Separation min |gamma_n - gamma_n'| >= sep_min > 0 and the block mean
    bound max_m (1/P)|sum_{k=mP}^{(m+1)P-1} delta_k| = L < 1/4.

    The block sum is averaged over its own length P. Published statements
    of this condition also circulate with a 1/N factor in front of the
    same P-term block; that reading is not used here.

    The margin is 1/4 - L for a separated sequence. Otherwise it is capped
    by the negative shortfall min_gap - sep_min, so satisfied holds exactly
    when the margin is positive, min_gap == sep_min included.
    The window must start at a multiple of P and consist of whole blocks.
    """
    if P < 1:
        raise ValueError('Block length must be at least 1')
    if sep_min <= 0:
        raise ValueError('The separation constant must be positive')
    start, _ = sequence.window
    if start % P or len(sequence) % P:
        raise IncompleteBlockError(
            'Window {} does not consist of whole blocks of length {}'
            .format(sequence.window, P))
    block_means = np.abs(sequence.deltas[:, 0].reshape(-1, P).mean(axis=1))
    L = float(np.max(block_means))
    values = np.sort(sequence.values[:, 0])
    min_gap = float(np.min(np.diff(values))) if len(values) > 1 else math.inf
    separated = min_gap >= sep_min
    margin = (QUARTER - L if separated
              else min(QUARTER - L, min_gap - sep_min))
    satisfied = separated and L < QUARTER
    report = ConditionReport('avdonin', satisfied, margin,
                             {'L': L, 'P': P, 'min_gap': min_gap,
                              'sep_min': sep_min, 'blocks': len(block_means),
                              'window': sequence.window})
    common.debug('Avdonin check: L = {}, min gap = {}, satisfied = {}'
                 .format(L, min_gap, satisfied))
    return report


def bailey_condition_check(family, A, L=None):
    """
    ||A^T lambda_n - n||_inf <= L for every indexed point, i.e.
    lambda_n in A^-T n + A^-T [-L, L]^d (A = I is the plain lattice case).

    With L given (0 < L < ln2/(pi d)) the containment is closed and the
    margin is L - max deviation. Without L the measured maximal deviation
    plays the role of L and must be strictly below ln2/(pi d).
    """
    A = as_mat(A)
    threshold = bailey_threshold(A.dim)
    if L is not None and not 0 < L < threshold:
        raise ValueError('L must lie in (0, {}), got {}'.format(threshold, L))
    deviations = np.abs(family.values @ A.array - family.indices)
    max_deviation = float(np.max(deviations))
    if L is None:
        satisfied = max_deviation < threshold
        margin = threshold - max_deviation
    else:
        satisfied = max_deviation <= L
        margin = L - max_deviation
    report = ConditionReport('bailey', satisfied, margin,
                             {'L': max_deviation if L is None else L,
                              'max_deviation': max_deviation,
                              'threshold': threshold,
                              'points': len(family)})
    common.debug('Bailey check: deviation {} against {}, satisfied = {}'
                 .format(max_deviation, L or threshold, satisfied))
    return report


def rounding_bound_check(freqs, M):
    """Every rounded point lies within l_inf distance 1/2 of its generator
    M n (closed bound)"""
    if freqs.indices is None:
        raise ValueError('The frequency set has no generator indices')
    generators = freqs.indices @ as_mat(M).array.T
    distance = float(np.max(np.abs(freqs.points - generators)))
    return ConditionReport('rounding-bound', distance <= 0.5, 0.5 - distance,
                           {'max_distance': distance,
                            'points': len(freqs)})
