# -*- coding: utf-8 -*-
"""
Closed-form Gram matrices of exponentials over parallelepipeds.

Substituting x = A t in the inner product of e^{2 pi i gamma.x} and
e^{2 pi i gamma'.x} over A[0,1]^d gives
    |det A| prod_k phi(u_k),  u = A^T (gamma - gamma'),
with phi(u) = (e^{2 pi i u} - 1) / (2 pi i u) = e^{i pi u} sinc(u).
"""
import numpy as np
import scipy.linalg
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

import resources.lib.common as common
from resources.lib.globals import g
from resources.lib.linalg import (NonConvergenceError, as_mat,
                                  check_nonsingular)

from .exceptions import TooLargeError

__all__ = ['phi', 'gram_entry', 'assemble_gram', 'eig_range',
           'orthogonality_test']

# Rows per task when the assembly is split over workers
ROW_BLOCK = 256


def phi(u):
    """(e^{2 pi i u} - 1) / (2 pi i u), phi(0) = 1, elementwise.
    Nonzero integers give exactly 0; below the Taylor cutoff the series
    1 + z/2 + z^2/6 + z^3/24 (z = 2 pi i u) is used"""
    u = np.asarray(u, dtype=float)
    if u.ndim == 0:
        return phi(u.reshape(1))[0]
    values = np.exp(1j * np.pi * u) * np.sinc(u)
    values[(u == np.rint(u)) & (u != 0)] = 0.0
    small = np.abs(u) < g.TAYLOR_CUTOFF
    if np.any(small):
        z = 2j * np.pi * u[small]
        values[small] = 1.0 + z / 2.0 + z ** 2 / 6.0 + z ** 3 / 24.0
    return values


def gram_entry(A, gamma, gamma_prime):
    """<e_gamma, e_gamma'> in L^2(A[0,1]^d)"""
    A = as_mat(A)
    volume = abs(check_nonsingular(A))
    difference = (np.asarray(gamma, dtype=float)
                  - np.asarray(gamma_prime, dtype=float))
    u = A.array.T @ difference.reshape(-1)
    return complex(volume * np.prod(phi(u)))


@common.time_execution(immediate=False)
def assemble_gram(A, freqs):
    """Hermitian Gram matrix of E(freqs) on A[0,1]^d. The upper triangle is
    computed and mirrored, so conjugate symmetry holds bit for bit"""
    A = as_mat(A)
    size = len(freqs)
    if size > g.GRAM_SIZE_CAP:
        raise TooLargeError(size, g.GRAM_SIZE_CAP)
    volume = abs(check_nonsingular(A))
    # Row i holds tau_i = A^T gamma_i
    tau = np.asarray(freqs.points, dtype=float) @ A.array
    gram = np.empty((size, size), dtype=complex)
    blocks = [slice(start, min(start + ROW_BLOCK, size))
              for start in range(0, size, ROW_BLOCK)]
    common.execute_tasks(blocks, _fill_rows, tau=tau, gram=gram,
                         volume=volume)
    lower = np.tril_indices(size, -1)
    gram[lower] = np.conj(gram.T[lower])
    gram[np.diag_indices(size)] = volume
    common.debug('Assembled Gram matrix of size {}'.format(size))
    return gram


def _fill_rows(rows, tau, gram, volume):
    block = np.full((rows.stop - rows.start, tau.shape[0]), volume,
                    dtype=complex)
    for k in range(tau.shape[1]):
        block *= phi(tau[rows, k][:, None] - tau[None, :, k])
    gram[rows] = block


def eig_range(gram):
    """Smallest and largest eigenvalue of a Hermitian matrix. Full
    decomposition up to DENSE_EIG_LIMIT, ARPACK Lanczos (deterministic
    all-ones start) beyond"""
    size = gram.shape[0]
    if size <= g.DENSE_EIG_LIMIT:
        eigenvalues = scipy.linalg.eigvalsh(gram)
        return float(eigenvalues[0]), float(eigenvalues[-1])
    start = np.ones(size, dtype=gram.dtype)
    try:
        smallest = eigsh(gram, k=1, which='SA', v0=start, tol=g.EIG_TOL,
                         return_eigenvectors=False)
        largest = eigsh(gram, k=1, which='LA', v0=start, tol=g.EIG_TOL,
                        return_eigenvectors=False)
    except ArpackNoConvergence as exc:
        common.error('Lanczos iteration failed: {exc}', exc)
        # ARPACK gives up after its default of 10 n iterations
        raise NonConvergenceError('Lanczos (ARPACK)', size * 10)
    return float(np.real(smallest[0])), float(np.real(largest[0]))


def orthogonality_test(A, freqs, tol=None):
    """True iff the Gram matrix is |det A| times the identity within
    tol |det A|, entrywise"""
    tol = g.ORTHOGONALITY_TOL if tol is None else tol
    gram = assemble_gram(A, freqs)
    volume = abs(check_nonsingular(A))
    diagonal = np.diag(gram).copy()
    off_diagonal = gram - np.diag(diagonal)
    off_error = float(np.max(np.abs(off_diagonal))) if len(freqs) else 0.0
    diagonal_error = (float(np.max(np.abs(diagonal - volume)))
                      if len(freqs) else 0.0)
    common.debug('Orthogonality test: off-diagonal {}, diagonal {}, '
                 'volume {}'.format(off_error, diagonal_error, volume))
    return off_error <= tol * volume and diagonal_error <= tol * volume
