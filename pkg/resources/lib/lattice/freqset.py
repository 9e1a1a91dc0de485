# -*- coding: utf-8 -*-
"""Finite truncated frequency sets"""
import numpy as np

from .exceptions import DuplicatePointError

__all__ = ['PROVENANCES', 'FreqSet', 'index_box']

PROVENANCES = ('rounded-dual', 'rectangular', 'lifted', 'spectral-norm',
               'tensor', 'explicit', 'orthogonal', 'beatty', 'perturbed')

# Floats at or above this magnitude are not converted to exact integers
_EXACT_INTEGER_LIMIT = 2.0 ** 53


def index_box(dim, radius):
    """All n in Z^d with |n_k| <= radius, in lexicographic order"""
    axis = np.arange(-radius, radius + 1, dtype=np.int64)
    grids = np.meshgrid(*([axis] * dim), indexing='ij')
    return np.stack([grid.ravel() for grid in grids], axis=1)


class FreqSet(object):
    """
    Finite set of frequencies in R^d.

    Points are kept as an (n, d) numpy array in generation order. Integer
    valued points are stored with an integer dtype. `indices` optionally
    records the generator index vector of every point and `index_radius`
    the truncation |n_k| <= N of the generating index set.
    """
    def __init__(self, points, provenance='explicit', index_radius=0,
                 indices=None, dim=None):
        if provenance not in PROVENANCES:
            raise ValueError('Unknown provenance {}'.format(provenance))
        points = np.asarray(points)
        if points.size == 0:
            if dim is None:
                raise ValueError('The dimension of an empty set is required')
            points = np.zeros((0, dim), dtype=np.int64)
        elif points.ndim == 1:
            # A flat list is a 1-D set unless a higher dimension is given
            points = (points.reshape(-1, 1) if dim in (None, 1)
                      else points.reshape(1, -1))
        if points.ndim != 2 or (dim is not None and points.shape[1] != dim):
            raise ValueError('Points must be d-vectors, got shape {}'
                             .format(points.shape))
        points = _exact_integers(points)
        if indices is not None:
            indices = np.asarray(indices, dtype=np.int64)
            indices = indices.reshape(len(points), -1)
            indices.setflags(write=False)
        _check_unique(points)
        points.setflags(write=False)
        self._points = points
        self.provenance = provenance
        self.index_radius = int(index_radius)
        self.indices = indices

    @property
    def dim(self):
        """Dimension d"""
        return self._points.shape[1]

    @property
    def points(self):
        """Read-only (n, d) array of the points"""
        return self._points

    @property
    def is_integer(self):
        """True when all points are stored as exact integers"""
        return np.issubdtype(self._points.dtype, np.integer)

    def __len__(self):
        return self._points.shape[0]

    def __iter__(self):
        return iter(self.as_tuples())

    def __contains__(self, point):
        point = np.asarray(point).reshape(1, -1)
        return bool(np.any(np.all(self._points == point, axis=1)))

    def as_tuples(self):
        """Points as tuples of python numbers"""
        return [tuple(point) for point in self._points.tolist()]

    def as_set(self):
        """Points as a python set of tuples"""
        return set(self.as_tuples())

    def window(self, radius):
        """Subset of the points inside the closed cube [-radius, radius]^d"""
        mask = np.all(np.abs(self._points) <= radius, axis=1)
        return self.subset(mask)

    def subset(self, mask):
        """Subset selected by a boolean mask, keeping order and provenance"""
        return FreqSet(self._points[mask], self.provenance, self.index_radius,
                       None if self.indices is None else self.indices[mask],
                       dim=self.dim)

    def to_dict(self):
        """JSON-ready representation. Integer points are emitted as JSON
        integers"""
        return {'dim': self.dim,
                'provenance': self.provenance,
                'index_radius': self.index_radius,
                'points': self._points.tolist()}

    def __repr__(self):
        return ('FreqSet(dim={}, size={}, provenance={}, index_radius={})'
                .format(self.dim, len(self), self.provenance,
                        self.index_radius))


def _exact_integers(points):
    if np.issubdtype(points.dtype, np.integer):
        return np.array(points, dtype=np.int64)
    points = np.array(points, dtype=float)
    if not np.all(np.isfinite(points)):
        raise ValueError('Frequency set points must be finite')
    if (np.all(points == np.rint(points))
            and np.all(np.abs(points) < _EXACT_INTEGER_LIMIT)):
        return points.astype(np.int64)
    return points


def _check_unique(points):
    if len(points) < 2:
        return
    _, inverse, counts = np.unique(points, axis=0, return_inverse=True,
                                   return_counts=True)
    if np.any(counts > 1):
        group = np.flatnonzero(counts > 1)[0]
        members = np.flatnonzero(inverse.reshape(-1) == group)
        raise DuplicatePointError(
            'Point {} occurs at positions {} and {}'
            .format(points[members[0]].tolist(), members[0], members[1]))
