# -*- coding: utf-8 -*-
"""Command executors: the construct, verify, certify, decompose, bounds and
emit-points pipelines"""
import numpy as np

import resources.lib.common as common
from resources.lib.bounds import (LINEAR_MAP, BoundCert, kadec_bounds,
                                  lindner_bounds, tensor_bounds,
                                  transform_bounds)
from resources.lib.construct import (LiftedRule, PerturbedSequence,
                                     RoundedDualRule, SpectralNormRule,
                                     avdonin_condition_check,
                                     bailey_condition_check,
                                     kadec_condition_check,
                                     rounding_bound_check,
                                     spectral_norm_condition)
from resources.lib.decomp import (MODE_ORTHOGONAL, MODE_RIESZ, Witness,
                                  check_witness, find_witness_heuristic,
                                  orthogonal_volume_obstruction,
                                  witness_matrix)
from resources.lib.globals import g
from resources.lib.lattice import (LatticeRule, beatty_fraenkel,
                                   decompose_rows, density_estimate,
                                   rational_beatty_family, reference_shift)
from resources.lib.linalg import (Mat, check_nonsingular, classify_matrix,
                                  inverse_transpose, spectral_norm)
from resources.lib.report import (CERTIFIED_ORTHOGONAL, CERTIFIED_RIESZ,
                                  EVIDENCE_ONLY, REJECTED, UNKNOWN,
                                  ConfigError, Report, emit_points)
from resources.lib.verify import (equidistribution_check,
                                  orthogonality_test, truncation_ladder)


class CommandExecutor(object):
    """Executes the commands of a run configuration and fills its report"""
    # pylint: disable=no-self-use
    def __init__(self, config):
        common.debug('Initializing CommandExecutor: {}'
                     .format(config.command))
        self.config = config
        self.report = Report(config.command, config.raw)

    @common.time_execution(immediate=False)
    def construct(self):
        """Build the configured frequency set and check the conditions its
        construction rests on"""
        rule = self.config.rule()
        freqs = rule.build(self.config.N)
        self.report.add_section('construction', _construction_section(rule,
                                                                      freqs))
        for condition in self._construction_conditions(rule, freqs):
            self.report.add_condition(condition)
        self._conclude_evidence()

    @common.time_execution(immediate=False)
    def verify(self):
        """Truncation ladder and density estimate of the configured set"""
        rule = self.config.rule()
        self._numerics(rule)
        gram = self.report.sections['gram']
        if gram['numerical_failure'] or not gram['eig_min'][-1] > g.EIG_TOL:
            self.report.set_verdict(UNKNOWN)
        else:
            self.report.set_verdict(EVIDENCE_ONLY)

    @common.time_execution(immediate=False)
    def certify(self):
        """Witness check or heuristic, construction, bounds, truncation
        ladder and density check, then the verdict"""
        if self.config.mode == MODE_ORTHOGONAL:
            rule = self._certify_orthogonal()
        else:
            rule = self._certify_riesz()
        if self.config.bounds:
            self._run_bound_requests()
        if rule is None:
            return
        self.report.add_section('construction', _construction_section(
            rule, rule.build(self.config.N)))
        self._numerics(rule)
        gram = self.report.sections['gram']
        if self.report.verdict == EVIDENCE_ONLY and (
                gram['numerical_failure']
                or not gram['eig_min'][-1] > g.EIG_TOL):
            common.warn('Numerical evidence is inconclusive')
            self.report.set_verdict(UNKNOWN)

    @common.time_execution(immediate=False)
    def decompose(self):
        """Check the configured witness or search for one"""
        A, B, mode = self.config.A, self.config.B, self.config.mode
        self.report.add_section('structure', {
            'BtA': (B.T @ A).tolist(),
            'classification': classify_matrix(B.T @ A).as_dict()})
        witness = self.config.witness
        if witness is None:
            if mode == MODE_ORTHOGONAL and self._volume_obstruction():
                return
            witness = self._heuristic_witness(mode)
            if witness is None:
                return
            tag = _witness_tag(mode, B, heuristic=True)
        else:
            if not self._checked_witness(witness):
                return
            tag = _witness_tag(mode, B)
        self.report.set_verdict(CERTIFIED_ORTHOGONAL
                                if mode == MODE_ORTHOGONAL
                                else CERTIFIED_RIESZ, tag)

    @common.time_execution(immediate=False)
    def bounds(self):
        """Evaluate the configured bound and condition requests"""
        self._run_bound_requests()
        self._conclude_evidence()

    @common.time_execution(immediate=False)
    def emit_points(self):
        """Write the configured point series as CSV"""
        if not g.POINTS_PATH:
            raise ConfigError(['--points'], 'emit-points needs a target file')
        counts = emit_points(self.config.A, self.config.series,
                             self.config.N, g.POINTS_PATH)
        self.report.add_section('points', {'target': g.POINTS_PATH,
                                           'N': self.config.N,
                                           'rows': counts})
        self.report.set_verdict(EVIDENCE_ONLY)

    def _certify_orthogonal(self):
        witness = self.config.witness
        tag = _witness_tag(MODE_ORTHOGONAL, self.config.B)
        if witness is not None:
            if not self._checked_witness(witness):
                return None
        else:
            if self._volume_obstruction():
                return None
            witness = self._heuristic_witness(MODE_ORTHOGONAL)
            if witness is None:
                return None
            tag = _witness_tag(MODE_ORTHOGONAL, self.config.B, True)
        A, B = self.config.A, self.config.B
        rule = LiftedRule(LatticeRule(Mat.identity(A.dim),
                                      provenance='orthogonal'),
                          witness.R, B, provenance='orthogonal')
        freqs = rule.build(self.config.N)
        self.report.add_section('orthogonality', {
            'N': self.config.N,
            'size': len(freqs),
            'orthogonal': orthogonality_test(A, freqs)})
        self.report.add_bound(transform_bounds(
            BoundCert(1.0, 1.0, 'orthogonal-basis'), LINEAR_MAP,
            B @ witness.R.T))
        self.report.set_verdict(CERTIFIED_ORTHOGONAL, tag)
        return rule

    def _certify_riesz(self):
        A, B = self.config.A, self.config.B
        witness = self.config.witness
        heuristic = False
        if witness is not None:
            if not self._checked_witness(witness):
                return None
        else:
            witness = self._heuristic_witness(MODE_RIESZ)
            heuristic = True
        if witness is not None:
            rule = _witness_rule(witness, B)
            base = (rule if isinstance(rule, RoundedDualRule)
                    else rule.base_rule)
            self.report.add_condition(rounding_bound_check(
                base.build(self.config.N), inverse_transpose(base.H)))
            self.report.set_verdict(CERTIFIED_RIESZ,
                                    _witness_tag(MODE_RIESZ, B, heuristic))
            return rule
        condition = spectral_norm_condition(A, B)
        self.report.add_condition(condition)
        if condition.satisfied:
            rule = SpectralNormRule(A, None if _is_identity(B) else B)
            self.report.add_condition(self._spectral_norm_bailey(rule))
            self.report.set_verdict(CERTIFIED_RIESZ, 'spectral-norm')
            return rule
        if self.config.construction is not None:
            self.report.set_verdict(EVIDENCE_ONLY)
            return self.config.rule()
        self.report.set_verdict(UNKNOWN)
        return None

    def _spectral_norm_bailey(self, rule):
        """Every point of the spectral norm construction lies in
        A^-T n + A^-T [-L, L]^d with L = ||B^T A||_2 sqrt(d) / 2"""
        A = rule.A
        M = A if rule.B is None else rule.B.T @ A
        L = spectral_norm(M) * np.sqrt(A.dim) / 2.0
        freqs = rule.build(self.config.N)
        return bailey_condition_check(PerturbedSequence.from_freqset(freqs),
                                      A, L)

    def _checked_witness(self, witness):
        """Check a configured witness; reject the run when it fails"""
        result = check_witness(self.config.A, self.config.B, witness)
        section = {'source': 'config', 'witness': witness.to_dict(),
                   'check': result.to_dict()}
        if result.accepted:
            section['matrix'] = witness_matrix(self.config.B,
                                               witness).tolist()
        self.report.add_section('witness', section)
        if not result.accepted:
            self.report.set_verdict(REJECTED, _witness_tag(witness.mode,
                                                           self.config.B))
        return result.accepted

    def _heuristic_witness(self, mode):
        """Bounded witness search. Finding nothing leaves the verdict
        untouched"""
        witness = find_witness_heuristic(self.config.A, self.config.B, mode)
        if witness is None:
            self.report.add_section('witness', {'source': 'heuristic',
                                                'found': False})
            return None
        self.report.add_section('witness', {'source': 'heuristic',
                                            'found': True,
                                            'witness': witness.to_dict()})
        return witness

    def _volume_obstruction(self):
        A, B = self.config.A, self.config.B
        inverse_volume = 1.0 / abs(check_nonsingular(A)
                                   * check_nonsingular(B))
        obstructed = orthogonal_volume_obstruction(A, B)
        self.report.add_section('volume_obstruction', {
            'inverse_volume': inverse_volume,
            'obstructed': obstructed})
        if obstructed:
            self.report.set_verdict(REJECTED, 'orthogonal-volume')
        return obstructed

    def _construction_conditions(self, rule, freqs):
        if isinstance(rule, RoundedDualRule):
            return [rounding_bound_check(freqs, inverse_transpose(rule.H))]
        if isinstance(rule, SpectralNormRule):
            return [spectral_norm_condition(rule.A, rule.B),
                    self._spectral_norm_bailey(rule)]
        return []

    def _numerics(self, rule):
        A = self.config.A
        ladder = truncation_ladder(A, rule, self.config.ladder_radii,
                                   self.config.normalized)
        self.report.add_section('gram', ladder)
        density = density_estimate(rule, self.config.density_radii)
        expected = abs(check_nonsingular(A))
        section = density.to_dict()
        section.update({
            'expected': expected,
            'consistent': (abs(density.extrapolated - expected)
                           <= g.DENSITY_TOL * expected)})
        if not section['consistent']:
            common.warn('Density {} does not match |det A| = {}'
                        .format(density.extrapolated, expected))
        self.report.add_section('density', section)

    def _conclude_evidence(self):
        if all(condition['satisfied'] for condition in self.report.conditions):
            self.report.set_verdict(EVIDENCE_ONLY)
        else:
            self.report.set_verdict(REJECTED)

    def _run_bound_requests(self):
        sequences = []
        for request in self.config.bounds:
            handler = self.__getattribute__(
                '_request_' + request['kind'].replace('-', '_'))
            result = handler(request)
            if result is not None:
                sequences.append(result)
        if sequences:
            self.report.add_section('sequences', sequences)

    def _bound_cert(self, request):
        """Certificate of a kadec, tensor, lindner or transform request"""
        kind = request['kind']
        if kind == 'kadec':
            return kadec_bounds(request['L'])[1]
        if kind == 'tensor':
            return tensor_bounds(request['Ls'])
        if kind == 'lindner':
            return lindner_bounds(request['B'], request['delta'],
                                  request['L'], request['P'])
        return transform_bounds(self._bound_cert(request['of']),
                                request['op'], request['A'])

    def _request_kadec(self, request):
        self.report.add_bound(self._bound_cert(request))

    _request_tensor = _request_kadec
    _request_lindner = _request_kadec
    _request_transform = _request_kadec

    def _request_kadec_condition(self, request):
        sequence = PerturbedSequence.from_deltas(
            request['sequence']['deltas'], request['sequence']['n_min'])
        condition = kadec_condition_check(sequence)
        self.report.add_condition(condition)
        if condition.satisfied:
            self.report.add_bound(kadec_bounds(condition.parameters['L'])[1])

    def _request_avdonin_condition(self, request):
        sequence = PerturbedSequence.from_deltas(
            request['sequence']['deltas'], request['sequence']['n_min'])
        self.report.add_condition(avdonin_condition_check(
            sequence, request['P'], request['sep_min']))

    def _request_bailey_condition(self, request):
        freqs = self.config.rule().build(self.config.N)
        self.report.add_condition(bailey_condition_check(
            PerturbedSequence.from_freqset(freqs), request['A'],
            request['L']))

    def _request_equidistribution(self, request):
        result = equidistribution_check(request['alpha'], request['betas'],
                                        request['P'], request['m_range'],
                                        request['epsilon'])
        condition = result.to_dict()
        condition.update({'condition': 'equidistribution',
                          'alpha': request['alpha']})
        self.report.add_condition(condition)

    def _request_beatty(self, request):
        first, last = request['k_range']
        freqs = beatty_fraenkel(request['alpha'], request['beta'], first,
                                last)
        return {'kind': 'beatty', 'alpha': request['alpha'],
                'beta': request['beta'], 'k_range': request['k_range'],
                'values': freqs.points[:, 0].tolist()}

    def _request_beatty_family(self, request):
        first, last = request['k_range']
        family = rational_beatty_family(request['alpha'], first, last)
        return {'kind': 'beatty-family', 'alpha': request['alpha'],
                'k_range': request['k_range'],
                'members': [{'beta': beta,
                             'values': freqs.points[:, 0].tolist()}
                            for beta, freqs in family]}

    def _request_reference_shift(self, request):
        return {'kind': 'reference-shift', 'alpha': request['alpha'],
                'beta': request['beta'], 'P': request['P'],
                'shift': reference_shift(request['alpha'], request['beta'],
                                         request['P'])}


def _construction_section(rule, freqs):
    section = {'rule': rule.describe(),
               'size': len(freqs),
               'frequencies': freqs.to_dict()}
    if freqs.dim >= 2 and freqs.is_integer:
        section['rows'] = [{'j': key, 'X': values}
                           for key, values in decompose_rows(freqs).items()]
    return section


def _witness_rule(witness, B):
    """Rounded dual construction of the witness H, lifted by B R^T unless
    both are the identity"""
    base = RoundedDualRule(witness.H)
    if _is_identity(witness.R) and _is_identity(B):
        return base
    return LiftedRule(base, witness.R, B)


def _witness_tag(mode, B, heuristic=False):
    if mode == MODE_ORTHOGONAL:
        tag = 'orthogonal-witness'
    elif _is_identity(B):
        tag = 'riesz-witness-integer-lattice'
    else:
        tag = 'riesz-witness'
    return tag + '-heuristic' if heuristic else tag


def _is_identity(M):
    return M == Mat.identity(M.dim)
