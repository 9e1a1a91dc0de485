# -*- coding: utf-8 -*-
"""Common exception types for bound formulas"""


class BoundsError(Exception):
    """A bound formula could not be evaluated"""
    pass


class OutOfRangeError(BoundsError):
    """A parameter violates the hypotheses of the bound formula"""
    pass
