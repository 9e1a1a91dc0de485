# -*- coding: utf-8 -*-
"""Common exception types for numerical verification"""


class VerificationError(Exception):
    """A numerical verification could not be carried out"""
    pass


class TooLargeError(VerificationError):
    """The frequency set exceeds the dense Gram matrix size cap"""
    def __init__(self, size, cap):
        super(TooLargeError, self).__init__(
            'Gram matrix of size {} exceeds the cap of {}'.format(size, cap))
        self.size = size
        self.cap = cap
