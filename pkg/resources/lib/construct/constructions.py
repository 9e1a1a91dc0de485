# -*- coding: utf-8 -*-
"""Constructions of integer (and prescribed lattice) frequency sets"""
import math

import numpy as np

import resources.lib.common as common
from resources.lib.lattice import (DuplicateAfterRoundingError, FreqSet,
                                   lattice_points, round_points,
                                   rounded_lattice)
from resources.lib.linalg import (Mat, as_mat, check_nonsingular,
                                  classify_matrix, inverse_transpose,
                                  is_integer_matrix, spectral_norm)

from .exceptions import (BadDiagonalError, BadStructureError,
                         InconsistentConstructionError, NormTooLargeError)
from .sequences import ConditionReport

__all__ = ['spectral_norm_threshold', 'spectral_norm_condition',
           'check_triangular_structure',
           'rounded_dual_construction', 'rectangular_construction',
           'lift_frequencies', 'spectral_norm_construction',
           'tensor_product', 'orthogonal_construction']


def spectral_norm_threshold(dim):
    """2 ln 2 / (pi d^(3/2))"""
    return 2.0 * math.log(2.0) / (math.pi * dim ** 1.5)


def spectral_norm_condition(A, B=None):
    """||B^T A||_2 < 2 ln 2 / (pi d^(3/2)) as a condition report"""
    M = as_mat(A) if B is None else as_mat(B).T @ as_mat(A)
    norm = spectral_norm(M)
    threshold = spectral_norm_threshold(M.dim)
    return ConditionReport('spectral-norm', norm < threshold, threshold - norm,
                           {'norm': norm, 'threshold': threshold})


def check_triangular_structure(H, tol=None):
    """Raise BadStructureError unless H is lower triangular with all
    diagonals in (0, 1]"""
    flags = classify_matrix(H, tol)
    if not flags.is_lower_triangular:
        raise BadStructureError('Matrix is not lower triangular: {}'
                                .format(as_mat(H).tolist()))
    if not flags.diag_in_unit_interval:
        raise BadStructureError('Diagonal entries {} are not all in (0, 1]'
                                .format(as_mat(H).diagonal().tolist()))


@common.time_execution(immediate=False)
def rounded_dual_construction(H, N):
    """r(H^-T n) for |n_k| <= N, H lower triangular with diagonals in (0,1].
    Under this structure rounding is injective; a collision is reported as
    an internal inconsistency"""
    H = as_mat(H)
    check_triangular_structure(H)
    try:
        freqs = rounded_lattice(inverse_transpose(H), N, 'rounded-dual')
    except DuplicateAfterRoundingError as exc:
        common.error('Rounded dual construction collided: {exc}', exc)
        raise InconsistentConstructionError(
            'Rounding collided for a lower triangular H with diagonals in '
            '(0,1]: {}'.format(exc))
    common.debug('Rounded dual construction: {} points'.format(len(freqs)))
    return freqs


def _rounded_factor(diagonal, offset, N):
    indices = np.arange(-N, N + 1, dtype=np.int64)
    points = round_points(indices / diagonal + offset, indices.reshape(-1, 1))
    return FreqSet(points, 'rectangular', N, indices, dim=1)


def rectangular_construction(diagonals, offsets=None, N=0):
    """r(Z/a_1 + delta_1) x ... x r(Z/a_d + delta_d), each factor truncated
    to the index window [-N, N]"""
    diagonals = [float(value) for value in diagonals]
    offsets = ([0.0] * len(diagonals) if offsets is None
               else [float(value) for value in offsets])
    if len(offsets) != len(diagonals):
        raise ValueError('Expected {} offsets, got {}'
                         .format(len(diagonals), len(offsets)))
    for diagonal in diagonals:
        if not 0 < diagonal <= 1:
            raise BadDiagonalError('Diagonal entry {} is outside (0, 1]'
                                   .format(diagonal))
    factors = [_rounded_factor(diagonal, offset, N)
               for diagonal, offset in zip(diagonals, offsets)]
    return tensor_product(factors, provenance='rectangular')


def lift_frequencies(freqs, R, B, provenance='lifted'):
    """B R^T C for an integer set C and an integer nonsingular R. The
    map is injective, so the result keeps the cardinality of C"""
    R, B = as_mat(R), as_mat(B)
    if not freqs.is_integer:
        raise BadStructureError('Only integer frequency sets can be lifted')
    if not is_integer_matrix(R):
        raise BadStructureError('R is not an integer matrix: {}'
                                .format(R.tolist()))
    R = Mat(np.rint(R.array))
    check_nonsingular(R)
    check_nonsingular(B)
    lifted = freqs.points @ (B @ R.T).array.T
    return FreqSet(lifted, provenance, freqs.index_radius, freqs.indices,
                   dim=freqs.dim)


@common.time_execution(immediate=False)
def spectral_norm_construction(A, N, B=None):
    """
    r((B^T A)^-T n) for |n_k| <= N, lifted by B when B is given, provided
    ||B^T A||_2 < 2 ln 2 / (pi d^(3/2)). The comparison is strict and
    without tolerance.
    """
    A = as_mat(A)
    M = A if B is None else as_mat(B).T @ A
    norm = spectral_norm(M)
    threshold = spectral_norm_threshold(M.dim)
    if not norm < threshold:
        common.warn('Spectral norm {} is not below {}'
                    .format(norm, threshold))
        raise NormTooLargeError(norm, threshold)
    freqs = rounded_lattice(inverse_transpose(M), N, 'spectral-norm')
    if B is not None:
        freqs = lift_frequencies(freqs, Mat.identity(M.dim), B,
                                 provenance='spectral-norm')
    common.debug('Spectral norm construction: norm {} < {}, {} points'
                 .format(norm, threshold, len(freqs)))
    return freqs


def tensor_product(sets, provenance='tensor'):
    """Cartesian product of one-dimensional sets, lexicographic in the
    factors' order"""
    if not sets:
        raise ValueError('At least one factor is required')
    for factor in sets:
        if factor.dim != 1:
            raise ValueError('Tensor factors must be one-dimensional')
    grids = np.meshgrid(*[factor.points[:, 0] for factor in sets],
                        indexing='ij')
    points = np.stack([grid.ravel() for grid in grids], axis=1)
    indices = None
    if all(factor.indices is not None for factor in sets):
        index_grids = np.meshgrid(*[factor.indices[:, 0] for factor in sets],
                                  indexing='ij')
        indices = np.stack([grid.ravel() for grid in index_grids], axis=1)
    return FreqSet(points, provenance,
                   max(factor.index_radius for factor in sets), indices,
                   dim=len(sets))


def orthogonal_construction(R, B, N):
    """B R^T Z^d for an accepted unitriangular witness: Z^d is an orthogonal
    basis on G[0,1]^d for any unitriangular G"""
    dim = as_mat(R).dim
    base = lattice_points(Mat.identity(dim), N, 'orthogonal')
    return lift_frequencies(base, R, B, provenance='orthogonal')
