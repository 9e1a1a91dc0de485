# -*- coding: utf-8 -*-
"""
Witness checking and the bounded witness search.

A witness (R, H, P) exhibits A[0,1]^d = B^-T R^-1 H[0,1]^d. Two
parallelepipeds with a vertex at the origin coincide iff their matrices
differ by a column permutation: the linear symmetries of the cube fixing
the origin vertex are exactly the coordinate permutations. So the set
equality is tested as "M^-1 A is a permutation matrix".
"""
import itertools

import numpy as np
from scipy.optimize import linear_sum_assignment

import resources.lib.common as common
from resources.lib.globals import g
from resources.lib.linalg import (Mat, as_mat, check_nonsingular,
                                  classify_matrix, det, inv,
                                  inverse_transpose, is_integer_matrix,
                                  permutation_matrix, permutation_order,
                                  singular_threshold)

__all__ = ['MODE_ORTHOGONAL', 'MODE_RIESZ', 'MODES', 'Witness',
           'WitnessReport', 'parallelepiped_equal', 'permutation_residual',
           'check_witness', 'find_witness_heuristic',
           'orthogonal_volume_obstruction', 'witness_matrix']

MODE_ORTHOGONAL = 'orthogonal'
MODE_RIESZ = 'riesz'
MODES = (MODE_ORTHOGONAL, MODE_RIESZ)


class Witness(object):
    """Decomposition witness (R, H, P) in orthogonal or riesz mode"""
    def __init__(self, R, H, P=None, mode=MODE_RIESZ):
        if mode not in MODES:
            raise ValueError('Unknown witness mode {}'.format(mode))
        self.R = as_mat(R)
        self.H = as_mat(H)
        if P is None:
            P = Mat.identity(self.H.dim)
        elif np.ndim(P) == 1:
            P = permutation_matrix(P)
        self.P = as_mat(P)
        if not self.R.dim == self.H.dim == self.P.dim:
            raise ValueError('Witness matrices must have equal dimension')
        self.mode = mode

    @property
    def dim(self):
        """Dimension d"""
        return self.H.dim

    def to_dict(self):
        """JSON-ready representation, P as a column index array"""
        return {'R': np.rint(self.R.array).astype(int).tolist(),
                'H': self.H.tolist(),
                'P': permutation_order(self.P),
                'mode': self.mode}

    def __repr__(self):
        return 'Witness({})'.format(self.to_dict())


class WitnessReport(object):
    """Outcome of check_witness; accepted iff no clause failed"""
    def __init__(self, failures, residual):
        self.failures = list(failures)
        self.residual = residual

    @property
    def accepted(self):
        """True when every clause of the witness holds"""
        return not self.failures

    def to_dict(self):
        """JSON-ready representation"""
        return {'accepted': self.accepted,
                'failures': self.failures,
                'residual': common.json_number(self.residual)}


def permutation_residual(A, M):
    """Closest permutation P to M^-1 A (by assignment) and the maximal
    entrywise deviation max|M^-1 A - P|. Exact column reorderings
    (A P^T == M bit for bit) report a residual of 0"""
    A, M = as_mat(A), as_mat(M)
    quotient = (inv(M) @ A).array
    rows, columns = linear_sum_assignment(-quotient)
    order = [int(row) for _, row in sorted(zip(columns, rows))]
    P = permutation_matrix(order)
    if np.array_equal(A.array @ P.array.T, M.array):
        return P, 0.0
    return P, float(np.max(np.abs(quotient - P.array)))


def parallelepiped_equal(A, M, tol=None):
    """True iff A[0,1]^d = M[0,1]^d, i.e. M^-1 A is a permutation matrix
    within tol"""
    tol = g.EPS_NUM if tol is None else tol
    check_nonsingular(A)
    _, residual = permutation_residual(A, M)
    return residual <= tol


def witness_matrix(B, witness):
    """B^-T R^-1 H, the matrix whose parallelepiped the witness claims"""
    return inverse_transpose(B) @ inv(witness.R) @ witness.H


def check_witness(A, B, witness, tol=None):
    """Verify the clauses of a witness for A[0,1]^d = B^-T R^-1 H[0,1]^d:
    R integer and nonsingular, H structured per mode, P a permutation and
    the parallelepipeds equal. Every failing clause is listed by name"""
    tol = g.EPS_NUM if tol is None else tol
    A, B = as_mat(A), as_mat(B)
    check_nonsingular(A)
    check_nonsingular(B)
    failures = []
    if not is_integer_matrix(witness.R, tol):
        failures.append('integer_R')
    rounded_R = Mat(np.rint(witness.R.array))
    if abs(det(rounded_R)) <= singular_threshold(rounded_R):
        failures.append('nonsingular_R')
    failures.extend(_structure_failures(witness.H, witness.mode, tol))
    if not classify_matrix(witness.P, tol).is_permutation:
        failures.append('permutation_P')
    residual = float('inf')
    if 'nonsingular_R' not in failures:
        claimed = witness_matrix(B, Witness(rounded_R, witness.H,
                                            witness.P, witness.mode))
        _, residual = permutation_residual(A @ witness.P, claimed)
        if residual > tol:
            failures.append('parallelepiped_equal')
    report = WitnessReport(failures, residual)
    if failures:
        common.warn('Witness rejected ({}): {}'
                    .format(witness.mode, ', '.join(failures)))
    else:
        common.debug('Witness accepted ({}), residual {}'
                     .format(witness.mode, residual))
    return report


def _structure_failures(H, mode, tol):
    flags = classify_matrix(H, tol)
    failures = []
    if not flags.is_lower_triangular:
        failures.append('lower_triangular')
    if mode == MODE_ORTHOGONAL:
        if not flags.is_unitriangular:
            failures.append('unitriangular')
    elif not flags.diag_in_unit_interval:
        failures.append('diag_in_unit_interval')
    return failures


@common.time_execution(immediate=False)
def find_witness_heuristic(A, B, mode=MODE_RIESZ, tol=None):
    """
    Bounded witness search: R = I and every column permutation P in
    lexicographic order, accepting the first P for which B^T A P passes
    the structural test of the mode.

    Returns None when the restricted search fails. This does not prove
    that no witness exists.
    """
    tol = g.EPS_NUM if tol is None else tol
    A, B = as_mat(A), as_mat(B)
    check_nonsingular(A)
    check_nonsingular(B)
    base = B.T @ A
    for order in itertools.permutations(range(A.dim)):
        P = permutation_matrix(order)
        H = base @ P
        if not _structure_failures(H, mode, tol):
            common.debug('Heuristic witness found with column order {}'
                         .format(list(order)))
            return Witness(Mat.identity(A.dim), H, P, mode)
    common.info('Heuristic witness search ({}) found nothing'.format(mode))
    return None


def orthogonal_volume_obstruction(A, B, tol=None):
    """True when no orthogonal witness can exist for (A, B) because
    |det A| |det B| is not of the form 1/k for a positive integer k
    (an orthogonal witness forces |det A| = 1 / (|det B| |det R|))"""
    tol = g.EPS_NUM if tol is None else tol
    inverse_volume = 1.0 / abs(check_nonsingular(A) * check_nonsingular(B))
    k = np.rint(inverse_volume)
    return bool(k < 1 or abs(inverse_volume - k) > tol * max(1.0, k))
