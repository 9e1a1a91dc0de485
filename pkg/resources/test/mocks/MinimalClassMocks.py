# -*- coding: utf-8 -*-
"""Minimal frequency rules for driving densities and ladders"""
import numpy as np

from resources.lib.lattice import FreqSet, FrequencyRule


class IntegerRule(FrequencyRule):
    """Z^d itself"""
    name = 'integers'

    def build(self, N):
        grids = np.meshgrid(*[np.arange(-N, N + 1)] * self.dim,
                            indexing='ij')
        points = np.stack([grid.ravel() for grid in grids], axis=1)
        return FreqSet(points, 'explicit', N, points, dim=self.dim)

    def index_radius_for_window(self, radius):
        return int(np.ceil(radius))
