# -*- coding: utf-8 -*-
"""Lattice enumeration and the rounding map r(x) = floor(x + 1/2)"""
from collections import OrderedDict

import numpy as np

import resources.lib.common as common
from resources.lib.linalg import as_mat, check_nonsingular

from .exceptions import DuplicateAfterRoundingError
from .freqset import FreqSet, index_box

__all__ = ['ROUNDING_LIMIT', 'round_half_up', 'lattice_points',
           'rounded_lattice', 'round_points', 'decompose_rows']

ROUNDING_LIMIT = 2.0 ** 52


def round_half_up(x):
    """
    Customary rounding r(x) = floor(x + 1/2), componentwise on arrays.

    Evaluated as floor(x) + [x - floor(x) >= 1/2]; the fractional part of a
    double below 2^52 is exact, so halves always round up.
    Returns an int for scalar input and an int64 array otherwise.
    """
    values = np.asarray(x, dtype=float)
    if np.any(~(np.abs(values) < ROUNDING_LIMIT)):
        raise ValueError('round_half_up requires |x| < 2^52')
    floor = np.floor(values)
    rounded = (floor + (values - floor >= 0.5)).astype(np.int64)
    return int(rounded) if rounded.ndim == 0 else rounded


def lattice_points(M, N, provenance='explicit'):
    """{M n : n in Z^d, |n_k| <= N}, (2N+1)^d points in lexicographic index
    order"""
    M = as_mat(M)
    check_nonsingular(M)
    indices = index_box(M.dim, N)
    points = indices @ M.array.T
    return FreqSet(points, provenance, N, indices, dim=M.dim)


def round_points(points, indices):
    """Round points and verify that no two indices collide. Returns the
    rounded int64 array"""
    rounded = round_half_up(points)
    if len(rounded) > 1:
        _, inverse, counts = np.unique(rounded, axis=0, return_inverse=True,
                                       return_counts=True)
        if np.any(counts > 1):
            group = np.flatnonzero(counts > 1)[0]
            first, second = np.flatnonzero(inverse.reshape(-1) == group)[:2]
            common.warn('Rounding collision at {}'
                        .format(rounded[first].tolist()))
            raise DuplicateAfterRoundingError(indices[first].tolist(),
                                              indices[second].tolist(),
                                              rounded[first].tolist())
    return rounded


@common.time_execution(immediate=False)
def rounded_lattice(M, N, provenance='explicit'):
    """r(M n) for all |n_k| <= N. Fails with DuplicateAfterRoundingError
    when two indices round to the same integer point"""
    lattice = lattice_points(M, N)
    rounded = round_points(lattice.points, lattice.indices)
    common.debug('Rounded {} lattice points (index radius {})'
                 .format(len(rounded), N))
    return FreqSet(rounded, provenance, N, lattice.indices, dim=lattice.dim)


def decompose_rows(freqs):
    """
    Split an integer set C in Z^d into rows C = U_j X_j x {j}, keyed by the
    trailing d-1 coordinates (the second coordinate when d = 2).
    Returns an OrderedDict with ascending keys mapping to sorted lists.
    """
    if freqs.dim < 2:
        raise ValueError('Row decomposition needs dimension >= 2')
    rows = {}
    for point in freqs.as_tuples():
        key = point[1] if freqs.dim == 2 else point[1:]
        rows.setdefault(key, []).append(point[0])
    return OrderedDict((key, sorted(rows[key])) for key in sorted(rows))
