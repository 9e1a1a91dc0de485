# -*- coding: utf-8 -*-
"""
Run configurations.

A run configuration is a JSON object. Matrices are row-major nested arrays
whose entries are numbers or expression strings ("1/sqrt(3)"). Every
validation failure raises ConfigError with the path of the offending field,
so a report can point at the exact place in the file.
"""
import json

import numpy as np

import resources.lib.common as common
from resources.lib.globals import g
from resources.lib.bounds import (LINEAR_MAP, TRANSLATE_DOMAIN,
                                  TRANSLATE_FREQUENCY)
from resources.lib.construct import (ConstructionError, LiftedRule,
                                     PerturbedRule, RectangularRule,
                                     RoundedDualRule, SpectralNormRule,
                                     TensorRule)
from resources.lib.decomp import MODE_RIESZ, MODES, Witness
from resources.lib.lattice import BeattyRule, LatticeError, LatticeRule
from resources.lib.linalg import (LinalgError, Mat, MAX_DIM,
                                  inverse_transpose)

from .exceptions import ConfigError
from .expressions import ExpressionError, exact_number

__all__ = ['RunConfig', 'load_config', 'parse_config', 'build_rule',
           'DEFAULT_N', 'DEFAULT_LADDER_RADII', 'DEFAULT_DENSITY_RADII',
           'SERIES', 'RULES', 'BOUND_KINDS', 'CERT_KINDS', 'DELTA_KINDS',
           'TRANSFORM_OPS', 'parse_matrix', 'parse_number', 'parse_exact']

DEFAULT_N = 3
DEFAULT_LADDER_RADII = [5, 10, 20, 40]
DEFAULT_DENSITY_RADII = [50, 100, 200]

SERIES = ('lattice', 'dual', 'rounded', 'vertices')

RULES = ('rounded-dual', 'rectangular', 'lifted', 'spectral-norm', 'tensor',
         'perturbed', 'lattice', 'dual', 'beatty', 'orthogonal')

BOUND_KINDS = ('kadec', 'tensor', 'lindner', 'transform', 'kadec-condition',
               'avdonin-condition', 'bailey-condition', 'equidistribution',
               'beatty', 'beatty-family', 'reference-shift')

DELTA_KINDS = ('constant', 'alternating', 'sine')

TRANSFORM_OPS = (TRANSLATE_DOMAIN, TRANSLATE_FREQUENCY, LINEAR_MAP)

# Requests producing a bound certificate
CERT_KINDS = ('kadec', 'tensor', 'lindner', 'transform')

# Commands and the top level fields they cannot do without
_REQUIRED = {
    g.CMD_CONSTRUCT: ['construction'],
    g.CMD_VERIFY: ['A', 'construction'],
    g.CMD_CERTIFY: ['A'],
    g.CMD_DECOMPOSE: ['A'],
    g.CMD_BOUNDS: ['bounds'],
    g.CMD_EMIT_POINTS: ['A'],
}


class RunConfig(object):
    """Validated run configuration"""
    # pylint: disable=too-many-instance-attributes
    def __init__(self, command, raw):
        self.command = command
        self.raw = raw
        self.A = None
        self.B = None
        self.mode = MODE_RIESZ
        self.witness = None
        self.construction = None
        self.N = DEFAULT_N
        self.ladder_radii = list(DEFAULT_LADDER_RADII)
        self.density_radii = list(DEFAULT_DENSITY_RADII)
        self.normalized = True
        self.bounds = []
        self.series = list(SERIES)
        self.tolerances = {}

    @property
    def dim(self):
        """Dimension of A, or None when the config has no A"""
        return None if self.A is None else self.A.dim

    def rule(self):
        """Frequency rule of the construction block"""
        return build_rule(self.construction, self, ['construction'])


def load_config(path, command):
    """Read and validate the run configuration stored in path"""
    try:
        raw = json.loads(common.load_file(path))
    except (IOError, OSError) as exc:
        raise ConfigError(None, 'Cannot read {}: {}'.format(path, exc))
    except ValueError as exc:
        raise ConfigError(None, 'Invalid JSON in {}: {}'.format(path, exc))
    common.debug('Loaded run configuration {}'.format(path))
    return parse_config(raw, command)


def parse_config(raw, command):
    """Validate a decoded run configuration for the given command"""
    if command not in _REQUIRED:
        raise ConfigError(['command'], 'Unknown command {}'.format(command))
    _expect(raw, dict, [], 'an object')
    for field in _REQUIRED[command]:
        if field not in raw:
            raise ConfigError([field], 'Required by {}'.format(command))
    config = RunConfig(command, raw)
    if 'tolerances' in raw:
        config.tolerances = _tolerances(raw['tolerances'])
    if 'A' in raw:
        config.A = parse_matrix(raw['A'], ['A'])
    config.B = (parse_matrix(raw['B'], ['B'], config.dim) if 'B' in raw
                else (None if config.A is None
                      else Mat.identity(config.A.dim)))
    if 'mode' in raw:
        config.mode = _choice(raw['mode'], MODES, ['mode'])
    if 'witness' in raw:
        config.witness = _witness(raw['witness'], config, ['witness'],
                                  'mode' in raw)
        config.mode = config.witness.mode
    if 'construction' in raw:
        config.construction = raw['construction']
        _expect(config.construction, dict, ['construction'], 'an object')
        if 'N' in config.construction:
            config.N = _integer(config.construction['N'],
                                ['construction', 'N'], minimum=0)
        # Fails early on an unusable construction block
        config.rule()
    if 'ladder_radii' in raw:
        config.ladder_radii = _radii(raw['ladder_radii'], ['ladder_radii'])
    if 'density_radii' in raw:
        config.density_radii = _radii(raw['density_radii'],
                                      ['density_radii'])
    if 'normalized' in raw:
        config.normalized = _expect(raw['normalized'], bool, ['normalized'],
                                    'a boolean')
    if 'bounds' in raw:
        _expect(raw['bounds'], list, ['bounds'], 'a list')
        config.bounds = [_bound_request(request, config, ['bounds', index])
                         for index, request in enumerate(raw['bounds'])]
        if not config.bounds:
            raise ConfigError(['bounds'], 'At least one request is needed')
    if 'series' in raw:
        _expect(raw['series'], list, ['series'], 'a list')
        config.series = [_choice(name, SERIES, ['series', index])
                         for index, name in enumerate(raw['series'])]
    return config


def parse_matrix(value, path, dim=None):
    """Square matrix from nested rows of numbers or expressions"""
    _expect(value, list, path, 'a list of rows')
    size = len(value)
    if not 1 <= size <= MAX_DIM:
        raise ConfigError(path, 'Dimension must lie in 1..{}, got {}'
                          .format(MAX_DIM, size))
    if dim is not None and size != dim:
        raise ConfigError(path, 'Expected a {0}x{0} matrix'.format(dim))
    rows = []
    for i, row in enumerate(value):
        _expect(row, list, path + [i], 'a list')
        if len(row) != size:
            raise ConfigError(path + [i], 'Matrix is not square')
        rows.append([parse_number(entry, path + [i, j])
                     for j, entry in enumerate(row)])
    return Mat(rows)


def parse_number(value, path):
    """Number or expression as a finite float"""
    return float(parse_exact(value, path))


def parse_exact(value, path):
    """Number or expression, exact (Fraction) where possible"""
    try:
        return exact_number(value)
    except ExpressionError as exc:
        raise ConfigError(path, str(exc))


def build_rule(section, config, path):
    """Frequency rule described by a construction block"""
    # pylint: disable=too-many-return-statements
    _expect(section, dict, path, 'an object')
    name = _choice(section.get('rule'), RULES, path + ['rule'])
    try:
        if name == 'rounded-dual':
            return RoundedDualRule(_matrix_or(section, 'H', config.A, path))
        if name == 'rectangular':
            diagonals = _numbers(_field(section, 'diagonals', path),
                                 path + ['diagonals'])
            offsets = (_numbers(section['offsets'], path + ['offsets'])
                       if 'offsets' in section else None)
            return RectangularRule(diagonals, offsets)
        if name == 'lifted':
            base = build_rule(_field(section, 'base', path), config,
                              path + ['base'])
            return LiftedRule(base, _matrix_or(section, 'R', None, path,
                                               base.dim),
                              _matrix_or(section, 'B', config.B, path,
                                         base.dim))
        if name == 'spectral-norm':
            return SpectralNormRule(_matrix_or(section, 'A', config.A, path),
                                    config.B)
        if name == 'tensor':
            factors = _field(section, 'factors', path)
            _expect(factors, list, path + ['factors'], 'a list')
            return TensorRule([build_rule(factor, config,
                                          path + ['factors', index])
                               for index, factor in enumerate(factors)])
        if name == 'perturbed':
            return _perturbed_rule(_field(section, 'delta', path),
                                   path + ['delta'])
        if name in ('lattice', 'dual'):
            M = _matrix_or(section, 'M', config.A, path)
            if name == 'dual':
                M = inverse_transpose(M)
            rounded = _expect(section.get('rounded', False), bool,
                              path + ['rounded'], 'a boolean')
            return LatticeRule(M, rounded)
        if name == 'beatty':
            return BeattyRule(parse_exact(_field(section, 'alpha', path),
                                          path + ['alpha']),
                              parse_exact(section.get('beta', 0),
                                          path + ['beta']))
        # orthogonal: B R^T Z^d
        R = _matrix_or(section, 'R', None, path,
                       None if config.A is None else config.A.dim)
        return LiftedRule(LatticeRule(Mat.identity(R.dim),
                                      provenance='orthogonal'),
                          R, _matrix_or(section, 'B', config.B, path, R.dim),
                          provenance='orthogonal')
    except ConfigError:
        raise
    except (ConstructionError, LatticeError, LinalgError,
            ValueError) as exc:
        # Library validation (structure, diagonals, alpha) of the block
        raise ConfigError(path, '{}: {}'.format(exc.__class__.__name__, exc))


def _perturbed_rule(delta, path):
    _expect(delta, dict, path, 'an object')
    kind = _choice(delta.get('kind'), DELTA_KINDS, path + ['kind'])
    amplitude = parse_number(_field(delta, 'amplitude', path),
                             path + ['amplitude'])
    return getattr(PerturbedRule, kind)(amplitude)


def _matrix_or(section, key, default, path, dim=None):
    if key in section:
        return parse_matrix(section[key], path + [key], dim)
    if default is None:
        raise ConfigError(path + [key], 'Required by rule {}'
                          .format(section.get('rule')))
    return default


def _witness(value, config, path, explicit_mode=False):
    """The witness decides the mode unless the config states a different
    one"""
    _expect(value, dict, path, 'an object')
    H = parse_matrix(_field(value, 'H', path), path + ['H'], config.dim)
    R = (parse_matrix(value['R'], path + ['R'], H.dim) if 'R' in value
         else Mat.identity(H.dim))
    P = None
    if 'P' in value:
        order = value['P']
        _expect(order, list, path + ['P'], 'a column order list')
        if sorted(order) != list(range(H.dim)):
            raise ConfigError(path + ['P'], 'Not a permutation of 0..{}'
                              .format(H.dim - 1))
        P = order
    mode = _choice(value.get('mode', config.mode), MODES, path + ['mode'])
    if explicit_mode and mode != config.mode:
        raise ConfigError(path + ['mode'],
                          'Witness mode {} contradicts mode {}'
                          .format(mode, config.mode))
    return Witness(R, H, P, mode)


def _bound_request(request, config, path):
    """Normalized copy of a bounds request with parsed parameters"""
    # pylint: disable=too-many-branches
    _expect(request, dict, path, 'an object')
    kind = _choice(request.get('kind'), BOUND_KINDS, path + ['kind'])
    parsed = {'kind': kind}
    if kind == 'kadec':
        parsed['L'] = parse_number(_field(request, 'L', path), path + ['L'])
    elif kind == 'tensor':
        parsed['Ls'] = _numbers(_field(request, 'Ls', path), path + ['Ls'])
    elif kind == 'lindner':
        for key in ('B', 'delta', 'L'):
            parsed[key] = parse_number(_field(request, key, path),
                                       path + [key])
        parsed['P'] = _integer(_field(request, 'P', path), path + ['P'], 1)
    elif kind == 'transform':
        parsed['of'] = _bound_request(_field(request, 'of', path), config,
                                      path + ['of'])
        if parsed['of']['kind'] not in CERT_KINDS:
            raise ConfigError(path + ['of', 'kind'],
                              'Only bound certificates can be transformed')
        parsed['op'] = _choice(_field(request, 'op', path), TRANSFORM_OPS,
                               path + ['op'])
        parsed['A'] = (parse_matrix(request['A'], path + ['A'])
                       if 'A' in request else config.A)
        if parsed['op'] == LINEAR_MAP and parsed['A'] is None:
            raise ConfigError(path + ['A'], 'Required by linear-map')
    elif kind in ('kadec-condition', 'avdonin-condition'):
        parsed['sequence'] = _sequence(request, path)
        if kind == 'avdonin-condition':
            parsed['P'] = _integer(_field(request, 'P', path), path + ['P'],
                                   1)
            parsed['sep_min'] = parse_number(_field(request, 'sep_min',
                                                    path),
                                             path + ['sep_min'])
    elif kind == 'bailey-condition':
        if config.construction is None:
            raise ConfigError(['construction'],
                              'Required by bailey-condition')
        parsed['A'] = (parse_matrix(request['A'], path + ['A'])
                       if 'A' in request else config.A)
        if parsed['A'] is None:
            raise ConfigError(path + ['A'], 'Required by bailey-condition')
        parsed['L'] = (parse_number(request['L'], path + ['L'])
                       if 'L' in request else None)
    elif kind == 'equidistribution':
        parsed['alpha'] = parse_exact(_field(request, 'alpha', path),
                                      path + ['alpha'])
        betas = _field(request, 'betas', path)
        _expect(betas, list, path + ['betas'], 'a list')
        parsed['betas'] = [parse_exact(beta, path + ['betas', index])
                           for index, beta in enumerate(betas)]
        parsed['P'] = _integer(_field(request, 'P', path), path + ['P'], 1)
        parsed['m_range'] = _range(_field(request, 'm_range', path),
                                   path + ['m_range'])
        parsed['epsilon'] = parse_number(_field(request, 'epsilon', path),
                                         path + ['epsilon'])
    else:
        # Beatty-Fraenkel requests
        parsed['alpha'] = parse_exact(_field(request, 'alpha', path),
                                      path + ['alpha'])
        if kind != 'beatty-family':
            parsed['beta'] = parse_exact(request.get('beta', 0),
                                         path + ['beta'])
        if kind == 'reference-shift':
            parsed['P'] = _integer(_field(request, 'P', path), path + ['P'],
                                   1)
        else:
            parsed['k_range'] = _range(_field(request, 'k_range', path),
                                       path + ['k_range'])
    return parsed


def _sequence(request, path):
    """(n_min, deltas) from explicit deltas or a delta kind over a window"""
    n_min = _integer(request.get('n_min', 0), path + ['n_min'])
    if 'deltas' in request:
        deltas = _numbers(request['deltas'], path + ['deltas'])
        return {'n_min': n_min, 'deltas': deltas}
    rule = _perturbed_rule(_field(request, 'delta', path), path + ['delta'])
    window = _range(_field(request, 'window', path), path + ['window'])
    indices = np.arange(window[0], window[1] + 1)
    return {'n_min': window[0],
            'deltas': [float(value) for value in rule.delta(indices)]}


def _tolerances(value):
    _expect(value, dict, ['tolerances'], 'an object')
    tolerances = {}
    for key, entry in value.items():
        if key not in g.TOLERANCE_KEYS:
            raise ConfigError(['tolerances', key], 'Unknown tolerance')
        number = parse_number(entry, ['tolerances', key])
        if not number > 0:
            raise ConfigError(['tolerances', key], 'Must be positive')
        tolerances[key] = number
    return tolerances


def _radii(value, path):
    _expect(value, list, path, 'a list')
    radii = [parse_number(entry, path + [index])
             for index, entry in enumerate(value)]
    if not radii or radii[0] <= 0:
        raise ConfigError(path, 'Radii must be positive and non-empty')
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ConfigError(path, 'Radii must be strictly increasing')
    return [int(radius) if float(radius).is_integer() else radius
            for radius in radii]


def _range(value, path):
    _expect(value, list, path, 'a [first, last] pair')
    if len(value) != 2:
        raise ConfigError(path, 'Expected a [first, last] pair')
    first, last = (_integer(entry, path + [index])
                   for index, entry in enumerate(value))
    if last < first:
        raise ConfigError(path, 'Empty range')
    return [first, last]


def _numbers(value, path):
    _expect(value, list, path, 'a list')
    if not value:
        raise ConfigError(path, 'Must not be empty')
    return [parse_number(entry, path + [index])
            for index, entry in enumerate(value)]


def _integer(value, path, minimum=None):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, 'Expected an integer, got {!r}'.format(value))
    if minimum is not None and value < minimum:
        raise ConfigError(path, 'Must be at least {}'.format(minimum))
    return value


def _field(container, key, path):
    try:
        return container[key]
    except KeyError:
        raise ConfigError(path + [key], 'Missing field')


def _choice(value, choices, path):
    if value not in choices:
        raise ConfigError(path, 'Expected one of {}, got {!r}'
                          .format(', '.join(choices), value))
    return value


def _expect(value, kind, path, description):
    if not isinstance(value, kind) or (kind is not bool
                                       and isinstance(value, bool)):
        raise ConfigError(path, 'Expected {}'.format(description))
    return value

