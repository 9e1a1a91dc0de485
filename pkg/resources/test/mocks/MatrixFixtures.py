# -*- coding: utf-8 -*-
"""Matrices and constants shared by the tests"""
import math

from resources.lib.linalg import Mat

# Lower triangular matrix of the worked rounding example
H_EX = Mat([[1.0 / math.sqrt(3.0), 0.0],
            [1.0 / math.sqrt(5.0), 1.0 / math.sqrt(2.0)]])

H_EX_CONFIG = [['1/sqrt(3)', 0], ['1/sqrt(5)', '1/sqrt(2)']]


def rotation(degrees, scale=1.0):
    """scale times the plane rotation by the given angle"""
    angle = math.radians(degrees)
    return Mat([[scale * math.cos(angle), -scale * math.sin(angle)],
                [scale * math.sin(angle), scale * math.cos(angle)]])


ROTATION_30 = rotation(30.0, 0.1)

# Rows X_j of the rounded set r(H_EX^-T Z^2) inside the displayed window
EXAMPLE_ROWS = {
    3: [-4, -2, 0, 1, 3],
    1: [-3, -1, 1, 2, 4],
    0: [-3, -2, 0, 2, 3],
    -1: [-4, -2, -1, 1, 3],
}
EXAMPLE_J = [-4, -3, -1, 0, 1, 3, 4]

KADEC_B_02 = 0.7787682579175256
KADEC_LOWER_02 = 0.0489434837
KADEC_UPPER_02 = 3.1640165153
