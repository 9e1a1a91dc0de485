# -*- coding: utf-8 -*-
"""Dense d x d real matrices and the handful of operations the constructions
need: determinants, inverses, spectral norms and structural classification.

Inverses and determinants go through an LU factorization with partial
pivoting (LAPACK getrf via scipy). A matrix counts as singular when
|det M| <= EPS_SING_FACTOR * max|m_ij|^d."""
import numpy as np
import scipy.linalg

import resources.lib.common as common

from resources.lib.globals import g

from .exceptions import SingularMatrixError, NonConvergenceError

__all__ = ['MAX_DIM', 'Mat', 'MatClass', 'as_mat', 'det', 'inv',
           'check_nonsingular', 'inverse_transpose', 'inf_norm',
           'singular_threshold', 'spectral_norm', 'classify_matrix',
           'is_integer_matrix', 'permutation_matrix', 'permutation_order']

MAX_DIM = 8


class Mat(object):
    """Immutable square real matrix of dimension 1 <= d <= 8"""
    __slots__ = ('_array',)

    def __init__(self, rows):
        array = np.array(rows, dtype=float)
        if array.ndim == 0:
            array = array.reshape(1, 1)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise ValueError('Matrix must be square, got shape {}'
                             .format(array.shape))
        if not 1 <= array.shape[0] <= MAX_DIM:
            raise ValueError('Matrix dimension must lie in [1, {}], got {}'
                             .format(MAX_DIM, array.shape[0]))
        if not np.all(np.isfinite(array)):
            raise ValueError('Matrix entries must be finite')
        array.setflags(write=False)
        self._array = array

    @classmethod
    def identity(cls, dim):
        """The d x d identity"""
        return cls(np.eye(dim))

    @classmethod
    def diag(cls, values):
        """Diagonal matrix with the given diagonal"""
        return cls(np.diag(np.asarray(values, dtype=float)))

    @property
    def dim(self):
        """Dimension d"""
        return self._array.shape[0]

    @property
    def array(self):
        """Read-only numpy view of the entries"""
        return self._array

    @property
    def entries(self):
        """Entries in row-major order"""
        return tuple(float(value) for value in self._array.ravel())

    @property
    def T(self):  # pylint: disable=invalid-name
        """Transpose"""
        return Mat(self._array.T)

    def diagonal(self):
        """Diagonal entries as a numpy vector"""
        return np.diag(self._array).copy()

    def scaled(self, factor):
        """Return factor * self"""
        return Mat(self._array * factor)

    def tolist(self):
        """Nested list of rows"""
        return self._array.tolist()

    def __matmul__(self, other):
        if isinstance(other, Mat):
            return Mat(self._array @ other.array)
        return self._array @ np.asarray(other, dtype=float)

    def __eq__(self, other):
        return (isinstance(other, Mat)
                and np.array_equal(self._array, other.array))

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def __repr__(self):
        return 'Mat({})'.format(self.tolist())


class MatClass(object):
    """Structural flags of a matrix under an entrywise tolerance"""
    # pylint: disable=too-few-public-methods
    def __init__(self, is_integer, is_lower_triangular, is_unitriangular,
                 is_permutation, diag_in_unit_interval):
        self.is_integer = is_integer
        self.is_lower_triangular = is_lower_triangular
        self.is_unitriangular = is_unitriangular
        self.is_permutation = is_permutation
        self.diag_in_unit_interval = diag_in_unit_interval

    def as_dict(self):
        """Flags as a plain dict"""
        return {'is_integer': self.is_integer,
                'is_lower_triangular': self.is_lower_triangular,
                'is_unitriangular': self.is_unitriangular,
                'is_permutation': self.is_permutation,
                'diag_in_unit_interval': self.diag_in_unit_interval}

    def __repr__(self):
        return 'MatClass({})'.format(self.as_dict())


def as_mat(value):
    """Coerce nested lists, numpy arrays or scalars into a Mat"""
    return value if isinstance(value, Mat) else Mat(value)


def det(M):
    """Determinant with its sign"""
    M = as_mat(M)
    return float(scipy.linalg.det(M.array))


def singular_threshold(M):
    """Scale-aware singularity threshold EPS_SING_FACTOR * max|m_ij|^d"""
    M = as_mat(M)
    return g.EPS_SING_FACTOR * float(np.max(np.abs(M.array))) ** M.dim


def check_nonsingular(M):
    """Raise SingularMatrixError unless |det M| exceeds the singularity
    threshold. Returns the determinant"""
    M = as_mat(M)
    determinant = det(M)
    threshold = singular_threshold(M)
    if abs(determinant) <= threshold:
        raise SingularMatrixError(determinant, threshold)
    return determinant


def inv(M):
    """Inverse of M. Raises SingularMatrixError below the singularity
    threshold"""
    M = as_mat(M)
    check_nonsingular(M)
    lu_and_piv = scipy.linalg.lu_factor(M.array, check_finite=False)
    return Mat(scipy.linalg.lu_solve(lu_and_piv, np.eye(M.dim),
                                     check_finite=False))


def inverse_transpose(M):
    """M^{-T}, the basis of the dual lattice of M Z^d"""
    return inv(M).T


def inf_norm(M):
    """Induced infinity norm (maximum absolute row sum)"""
    M = as_mat(M)
    return float(np.max(np.sum(np.abs(M.array), axis=1)))


def spectral_norm(M, rtol=None, max_iterations=None):
    """Largest singular value of M by power iteration on M^T M.

    The iteration stops on the eigen-residual of the Rayleigh quotient,
    ||G v - rho v|| <= rtol * rho, which puts rho within relative rtol of an
    eigenvalue of G = M^T M. The result is cross-checked against the
    singular values from LAPACK: an iterate that settled on a smaller
    eigenvalue (or vanished) restarts deterministically from
    (1, 2, ..., d) and then from the unit vectors, the first start being
    the all-ones vector. Clustered top singular values make the residual
    stall and end in NonConvergenceError."""
    M = as_mat(M)
    rtol = g.SPECTRAL_NORM_RTOL if rtol is None else rtol
    max_iterations = (g.POWER_ITERATION_CAP if max_iterations is None
                      else max_iterations)
    gram = M.array.T @ M.array
    scale = float(np.max(np.abs(gram)))
    if scale == 0.0:
        return 0.0
    reference = float(scipy.linalg.svdvals(M.array)[0])
    for start in _start_vectors(M.dim):
        eigenvalue = _power_iteration(gram, start, scale, rtol,
                                      max_iterations)
        if eigenvalue is None:
            continue
        estimate = float(np.sqrt(eigenvalue))
        if abs(estimate - reference) <= rtol * reference:
            return estimate
        common.debug('Power iteration settled on {} instead of {}, '
                     'restarting'.format(estimate, reference))
    raise NonConvergenceError('power iteration', max_iterations)


def _start_vectors(dim):
    yield np.ones(dim)
    yield np.arange(1.0, dim + 1.0)
    for index in range(dim):
        yield np.eye(dim)[index]


def _power_iteration(gram, start, scale, rtol, max_iterations):
    vector = start / np.linalg.norm(start)
    for _ in range(max_iterations):
        image = gram @ vector
        length = float(np.linalg.norm(image))
        if length <= 1e-14 * scale:
            return None
        rayleigh = float(vector @ image)
        residual = float(np.linalg.norm(image - rayleigh * vector))
        if residual <= rtol * rayleigh:
            return rayleigh
        vector = image / length
    raise NonConvergenceError('power iteration', max_iterations)


def is_integer_matrix(M, tol=None):
    """True when every entry lies within tol of an integer"""
    M = as_mat(M)
    tol = g.EPS_NUM if tol is None else tol
    return bool(np.all(np.abs(M.array - np.rint(M.array)) <= tol))


def classify_matrix(M, tol=None):
    """Structural classification of M with entrywise tolerance tol.
    Diagonal entries are tested against the half-open interval
    (tol, 1 + tol]."""
    M = as_mat(M)
    tol = g.EPS_NUM if tol is None else tol
    array = M.array
    diagonal = np.diag(array)
    is_integer = is_integer_matrix(M, tol)
    is_lower = bool(np.all(np.abs(np.triu(array, k=1)) <= tol))
    is_unitriangular = is_lower and bool(np.all(np.abs(diagonal - 1.0) <= tol))
    is_permutation = False
    if is_integer:
        rounded = np.rint(array)
        is_permutation = bool(
            np.all((rounded == 0) | (rounded == 1))
            and np.all(rounded.sum(axis=0) == 1)
            and np.all(rounded.sum(axis=1) == 1))
    diag_in_unit_interval = bool(np.all((diagonal > tol)
                                        & (diagonal <= 1.0 + tol)))
    return MatClass(is_integer, is_lower, is_unitriangular, is_permutation,
                    diag_in_unit_interval)


def permutation_matrix(order):
    """Permutation matrix P such that (A P)[:, j] = A[:, order[j]]"""
    dim = len(order)
    array = np.zeros((dim, dim))
    for column, row in enumerate(order):
        array[row, column] = 1.0
    return Mat(array)


def permutation_order(P):
    """Inverse of permutation_matrix: the column order encoded by P"""
    P = as_mat(P)
    return [int(np.argmax(P.array[:, column])) for column in range(P.dim)]
