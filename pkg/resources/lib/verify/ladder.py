# -*- coding: utf-8 -*-
"""
Extreme eigenvalues of nested Gram truncations.

The windows [-r, r]^d are nested, so each Gram matrix is a principal
submatrix of the next one and Cauchy interlacing forces eig_min to be
non-increasing and eig_max non-decreasing along the ladder. A violation
beyond the eigensolver tolerance flags a numerical failure.

Finite sections are evidence, not proof: the smallest eigenvalue of a
truncation is an upper estimate of the true lower Riesz bound.
"""
import resources.lib.common as common
from resources.lib.globals import g
from resources.lib.linalg import as_mat, check_nonsingular

from .gram import assemble_gram, eig_range

__all__ = ['ORIENTATION', 'GramReport', 'truncation_ladder']

ORIENTATION = ('finite-section eigenvalues: eig_min over-estimates the '
               'lower Riesz bound, eig_max under-estimates the upper one')


class GramReport(object):
    """Extreme eigenvalues per window radius of a truncation ladder"""
    # pylint: disable=too-many-arguments
    def __init__(self, radius_ladder, sizes, eig_min, eig_max, normalized,
                 volume):
        self.radius_ladder = list(radius_ladder)
        self.sizes = list(sizes)
        self.eig_min = list(eig_min)
        self.eig_max = list(eig_max)
        self.normalized = normalized
        self.volume = volume
        self.interlacing_violations = _interlacing_violations(
            self.eig_min, self.eig_max)
        self.numerical_failure = bool(
            self.interlacing_violations
            or any(value < -g.EIG_TOL for value in self.eig_min))

    @property
    def floor(self):
        """eig_min at the largest radius"""
        return self.eig_min[-1]

    @property
    def stabilized(self):
        """Relative change of eig_min between the last two radii below
        LADDER_STABILITY"""
        if len(self.eig_min) < 2 or self.eig_min[-2] <= 0:
            return False
        change = abs(self.eig_min[-1] - self.eig_min[-2]) / self.eig_min[-2]
        return change < g.LADDER_STABILITY

    def to_dict(self):
        """JSON-ready representation with full double precision"""
        return {'radius_ladder': self.radius_ladder,
                'sizes': self.sizes,
                'eig_min': self.eig_min,
                'eig_max': self.eig_max,
                'normalized': self.normalized,
                'volume': self.volume,
                'numerical_failure': self.numerical_failure,
                'interlacing_violations': self.interlacing_violations,
                'stabilized': self.stabilized,
                'orientation': ORIENTATION}


def _interlacing_violations(eig_min, eig_max):
    violations = []
    for index in range(1, len(eig_min)):
        scale = max(1.0, abs(eig_max[index]))
        if eig_min[index] > eig_min[index - 1] + g.EIG_TOL * scale:
            violations.append({'position': index, 'series': 'eig_min'})
        if eig_max[index] < eig_max[index - 1] - g.EIG_TOL * scale:
            violations.append({'position': index, 'series': 'eig_max'})
    return violations


def _ladder_step(radius, A, rule, volume):
    freqs = rule.window(radius)
    gram = assemble_gram(A, freqs)
    smallest, largest = eig_range(gram)
    common.debug('Ladder radius {}: size {}, eigenvalues [{}, {}]'
                 .format(radius, len(freqs), smallest / volume,
                         largest / volume))
    return len(freqs), smallest, largest


@common.time_execution(immediate=False)
def truncation_ladder(A, rule, radii, normalized=True):
    """Gram extreme eigenvalues for the windows [-r, r]^d of the rule's set,
    r running through the increasing radii. The radii are evaluated on the
    worker pool and merged in radius order. With normalized the eigenvalues
    are divided by |det A|, so an orthogonal basis reads (1, 1)"""
    A = as_mat(A)
    radii = list(radii)
    if not radii or any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError('Ladder radii must be a non-empty increasing list')
    volume = abs(check_nonsingular(A))
    steps = common.execute_tasks(radii, _ladder_step, A=A, rule=rule,
                                 volume=volume)
    scale = volume if normalized else 1.0
    report = GramReport(radii, [step[0] for step in steps],
                        [float(step[1] / scale) for step in steps],
                        [float(step[2] / scale) for step in steps],
                        normalized, volume)
    if report.numerical_failure:
        common.error('Truncation ladder violates interlacing: {}'
                     .format(report.interlacing_violations))
    return report
