# -*- coding: utf-8 -*-
"""Landau density estimates from centered window counts"""
import numpy as np

import resources.lib.common as common

__all__ = ['DensityReport', 'density_estimate']


class DensityReport(object):
    """Point counts and count / (2r)^d per window radius"""
    def __init__(self, dim, window_radii, counts):
        self.dim = dim
        self.window_radii = list(window_radii)
        self.counts = list(counts)
        self.estimates = [count / (2.0 * radius) ** dim
                          for radius, count in zip(self.window_radii,
                                                   self.counts)]

    @property
    def extrapolated(self):
        """Estimate at the largest window"""
        return self.estimates[-1]

    def to_dict(self):
        """JSON-ready representation"""
        return {'window_radii': self.window_radii,
                'counts': self.counts,
                'estimates': self.estimates,
                'extrapolated': self.extrapolated}


@common.time_execution(immediate=False)
def density_estimate(rule, window_radii):
    """Count the points of the rule's set in [-r, r]^d for each radius.
    The largest window is generated once and the smaller ones are counted
    from it."""
    window_radii = list(window_radii)
    if not window_radii:
        raise ValueError('At least one window radius is required')
    if any(radius <= 0 for radius in window_radii):
        raise ValueError('Window radii must be positive')
    if any(b <= a for a, b in zip(window_radii, window_radii[1:])):
        raise ValueError('Window radii must be strictly increasing')
    largest = rule.window(window_radii[-1])
    extent = (np.max(np.abs(largest.points), axis=1) if len(largest)
              else np.zeros(0))
    counts = [int(np.count_nonzero(extent <= radius))
              for radius in window_radii]
    report = DensityReport(rule.dim, window_radii, counts)
    common.debug('Density estimates {} at radii {}'
                 .format(report.estimates, window_radii))
    return report
