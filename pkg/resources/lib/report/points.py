# -*- coding: utf-8 -*-
"""CSV point files for plotting lattices, their rounded sets and the
parallelepiped"""
import csv
import io

import numpy as np

import resources.lib.common as common
from resources.lib.lattice import lattice_points, round_half_up
from resources.lib.linalg import as_mat, inverse_transpose

__all__ = ['series_points', 'parallelepiped_vertices', 'points_csv',
           'emit_points']


def parallelepiped_vertices(A):
    """The 2^d vertices A b of A[0,1]^d, b running through the corner bit
    vectors with the first coordinate varying fastest"""
    A = as_mat(A)
    corners = np.array([[(index >> k) & 1 for k in range(A.dim)]
                        for index in range(2 ** A.dim)], dtype=float)
    return corners @ A.array.T


def series_points(A, series, N):
    """Rows of one series for the index box |n_k| <= N.
    lattice is A Z^d, dual is A^-T Z^d and rounded is r(A^-T Z^d) row by
    row, so dual and rounded rows pair up"""
    if series == 'vertices':
        return parallelepiped_vertices(A)
    if series == 'lattice':
        return lattice_points(A, N).points
    dual = lattice_points(inverse_transpose(A), N).points
    if series == 'dual':
        return dual
    if series == 'rounded':
        return round_half_up(dual)
    raise ValueError('Unknown point series {}'.format(series))


def points_csv(A, series, N):
    """CSV text with the columns x1..xd and series, one block per series in
    the given order, rows in lexicographic index order"""
    A = as_mat(A)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['x{}'.format(k + 1) for k in range(A.dim)]
                    + ['series'])
    for name in series:
        points = series_points(A, name, N)
        for row in points.tolist():
            writer.writerow([repr(value) for value in row] + [name])
        common.debug('Series {}: {} rows'.format(name, len(points)))
    return buffer.getvalue()


def emit_points(A, series, N, target):
    """Write the point file to target and return the row count per series"""
    common.save_file(target, points_csv(A, series, N))
    return {name: len(series_points(A, name, N)) for name in series}
