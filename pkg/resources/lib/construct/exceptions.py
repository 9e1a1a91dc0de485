# -*- coding: utf-8 -*-
"""Common exception types for frequency set constructions"""


class ConstructionError(Exception):
    """A frequency set could not be constructed"""
    pass


class BadStructureError(ConstructionError):
    """A matrix does not have the structure the construction requires
    (lower triangular with diagonals in (0,1], integer, ...)"""
    pass


class BadDiagonalError(ConstructionError):
    """A diagonal entry of a rectangular construction is outside (0,1]"""
    pass


class NormTooLargeError(ConstructionError):
    """The spectral norm is not below the admissibility threshold"""
    def __init__(self, norm, threshold):
        super(NormTooLargeError, self).__init__(
            'Spectral norm {} is not below the threshold {}'
            .format(norm, threshold))
        self.norm = norm
        self.threshold = threshold


class IncompleteBlockError(ConstructionError):
    """The index window is not made of whole blocks of length P"""
    pass


class InconsistentConstructionError(ConstructionError):
    """A construction violated a property its preconditions guarantee"""
    pass
