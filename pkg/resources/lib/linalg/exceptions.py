# -*- coding: utf-8 -*-
"""Common exception types for linear algebra operations"""


class LinalgError(Exception):
    """A linear algebra operation could not be carried out"""
    pass


class SingularMatrixError(LinalgError):
    """The matrix is singular within the scale-aware tolerance"""
    def __init__(self, determinant, threshold):
        super(SingularMatrixError, self).__init__(
            'Matrix is singular: |det| = {} <= {}'
            .format(abs(determinant), threshold))
        self.determinant = determinant
        self.threshold = threshold


class NonConvergenceError(LinalgError):
    """An iterative method exceeded its iteration cap"""
    def __init__(self, method, iterations):
        super(NonConvergenceError, self).__init__(
            '{} did not converge within {} iterations'
            .format(method, iterations))
        self.method = method
        self.iterations = iterations
