# -*- coding: utf-8 -*-
"""Common exception types for lattice operations"""


class LatticeError(Exception):
    """A lattice or frequency set operation failed"""
    pass


class DuplicatePointError(LatticeError):
    """A frequency set was given the same point twice"""
    pass


class DuplicateAfterRoundingError(LatticeError):
    """Two distinct lattice indices were rounded to the same integer point,
    i.e. the lattice has spacing below 1 in some direction"""
    def __init__(self, first, second, point):
        super(DuplicateAfterRoundingError, self).__init__(
            'Indices {} and {} both round to {}'.format(first, second, point))
        self.first = first
        self.second = second
        self.point = point


class BadAlphaError(LatticeError):
    """The Beatty-Fraenkel parameter alpha is outside (0, 1] or not usable
    for the requested operation"""
    pass
