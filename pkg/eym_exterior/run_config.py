r"""
Run configurations

A run is described by a JSON object. Every key has a default in
:attr:`RunConfig.defaults`; unknown keys, values of the wrong type and
violated cross-field constraints raise a
:class:`~eym_exterior.exceptions.ConfigError` naming the dotted path of
the offending field.

EXAMPLES::

    sage: from eym_exterior.run_config import RunConfig
    sage: R = RunConfig({'n': 4, 'gamma': 0.5, 'mu': -0.25, 't_end': 4, 'r_max': 16})
    sage: R
    Run configuration (n=4, mode=linear, t_end=4.0, seed=0)
    sage: R['dr'], R['initial']['eps']
    (0.125, 0.001)
    sage: R.solver_config()
    Solver configuration (n=4, dr=0.125, r_max=16.0, t_end=4.0, linear, flat background)

AUTHORS:

- eym_exterior developers (2026-10-19): initial version
"""

# *****************************************************************************
#       Copyright (C) 2026 eym_exterior developers
#
#  Distributed under the terms of the GNU General Public License (GPL)
#
#  The full text of the GPL is available at:
#
#                  http://www.gnu.org/licenses/
# *****************************************************************************

import copy
import json
import numbers
from pathlib import Path
from types import MappingProxyType

from sage.structure.sage_object import SageObject
from eym_exterior.exceptions import ConfigError
from eym_exterior.initial_data import InitialDataSpec
from eym_exterior.lie_hierarchy import N_MAX
from eym_exterior.solver import SolverConfig, content_hash
from eym_exterior.sources import SourceConfig
from eym_exterior.weights import WeightParams

_NUMBER = 'number'
_INTEGER = 'integer'
_STRING = 'string'
_BOOLEAN = 'boolean'
_LIST = 'list'

# key: (type, nullable)
_SCHEMA = {
    'n': (_INTEGER, False),
    'r_max': (_NUMBER, False),
    'dr': (_NUMBER, False),
    'cfl': (_NUMBER, False),
    't_end': (_NUMBER, False),
    'N': (_INTEGER, False),
    'mode': (_STRING, False),
    'group': (_STRING, False),
    'include_PQG': (_BOOLEAN, False),
    'background': (_STRING, False),
    'prescribed_C': (_NUMBER, False),
    'gamma': (_NUMBER, False),
    'mu': (_NUMBER, False),
    'q0': (_NUMBER, False),
    'delta': (_NUMBER, False),
    'lam': (_NUMBER, False),
    'diagnostic_stride': (_INTEGER, False),
    'snapshot_every': (_NUMBER, True),
    'seed': (_INTEGER, False),
    'out': (_STRING, False),
    'initial': {
        'profile': (_STRING, False),
        'eps': (_NUMBER, False),
        'r0': (_NUMBER, False),
        'width': (_NUMBER, False),
        'p': (_NUMBER, True),
        'pi': (_STRING, False),
        'components': (_LIST, True)},
    'identities': {
        'n_values': (_LIST, False),
        'samples': (_INTEGER, False)},
    'hardy': {
        'n': (_INTEGER, False),
        'ks': (_LIST, False),
        'a': (_LIST, False),
        'r_max': (_NUMBER, False),
        'dr': (_NUMBER, False)},
    'conservation': {
        't1': (_NUMBER, True),
        't2': (_NUMBER, True),
        'weighted': (_BOOLEAN, False)},
    'decay': {
        'observable': (_STRING, False),
        'window': (_LIST, False)},
    'gronwall': {
        'windows': (_INTEGER, False),
        'C_budget': (_NUMBER, True)},
    'bootstrap': {
        'E_target': (_NUMBER, True),
        'target_factor': (_NUMBER, False)},
}


def _plain(value):
    """
    Return ``value`` with Sage and numpy numbers turned into Python ones.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, numbers.Integral):
        return int(value)
    try:
        return float(value)
    except (TypeError, ValueError):
        return value


def _check_type(value, kind, nullable, path):
    value = _plain(value)
    if value is None:
        if nullable:
            return None
        raise ConfigError("a value is required", path=path)
    if kind == _BOOLEAN:
        if not isinstance(value, bool):
            raise ConfigError("expected a boolean, got %r" % (value,), path=path)
        return value
    if isinstance(value, bool):
        raise ConfigError("expected a %s, got %r" % (kind, value), path=path)
    if kind == _INTEGER:
        if isinstance(value, float) and value.is_integer():
            value = int(value)
        if not isinstance(value, int):
            raise ConfigError("expected an integer, got %r" % (value,), path=path)
        return value
    if kind == _NUMBER:
        if not isinstance(value, (int, float)):
            raise ConfigError("expected a number, got %r" % (value,), path=path)
        return float(value)
    if kind == _STRING:
        if not isinstance(value, str):
            raise ConfigError("expected a string, got %r" % (value,), path=path)
        return value
    if not isinstance(value, list):
        raise ConfigError("expected a list, got %r" % (value,), path=path)
    return value


def _resolve(data, schema, defaults, prefix=''):
    if not isinstance(data, dict):
        raise ConfigError("expected an object", path=prefix.rstrip('.') or None)
    out = {}
    for key in data:
        if key not in schema:
            raise ConfigError("unknown key", path=prefix + str(key))
    for key, spec in schema.items():
        path = prefix + key
        if isinstance(spec, dict):
            out[key] = _resolve(data.get(key, {}), spec, defaults[key], path + '.')
        elif key in data:
            out[key] = _check_type(data[key], spec[0], spec[1], path)
        else:
            out[key] = copy.deepcopy(defaults[key])
    return out


class RunConfig(SageObject):
    r"""
    A validated run configuration with all defaults filled in.

    INPUT:

    - ``data`` -- (default: ``{}``) a dictionary following the schema of
      :attr:`defaults`; nested sections may be partial

    Besides the types, the constraints checked are `\delta = 0`,
    `N \leq 4`, `t_{end} + q_0 < r_{\max} - 4 \Delta r` and
    `r_{\max} \geq r_{support} + t_{end} + 8 \Delta r`, so that no signal
    reaches the outer edge before `t_{end}`; everything the
    parameter classes check is reported with the path of its section.

    EXAMPLES::

        sage: from eym_exterior.run_config import RunConfig
        sage: RunConfig({'delta': 0.1})
        Traceback (most recent call last):
        ...
        ConfigError: delta: delta is pinned to 0
        sage: RunConfig({'t_end': 70})
        Traceback (most recent call last):
        ...
        ConfigError: t_end: t_end + q0 = 70.0 must stay below r_max - 4 dr = 63.5
        sage: RunConfig({'initial': {'r0': 55, 'width': 2}, 't_end': 8})
        Traceback (most recent call last):
        ...
        ConfigError: initial: r_max = 64.0 must be at least r_support + t_end + 8 dr = 66.0
        sage: RunConfig({'N': 5})
        Traceback (most recent call last):
        ...
        ConfigError: N: N = 5 must lie in [0, 4]
        sage: RunConfig({'initial': {'eps': 'large'}})
        Traceback (most recent call last):
        ...
        ConfigError: initial.eps: expected a number, got 'large'
        sage: RunConfig({'hardy': {'b': 1}})
        Traceback (most recent call last):
        ...
        ConfigError: hardy.b: unknown key
        sage: RunConfig({'gamma': -1})
        Traceback (most recent call last):
        ...
        ConfigError: gamma: gamma must be positive
    """
    defaults = MappingProxyType({
        'n': 4, 'r_max': 64.0, 'dr': 0.125, 'cfl': 0.25, 't_end': 8.0, 'N': 2,
        'mode': 'linear', 'group': 'su2', 'include_PQG': False,
        'background': 'flat', 'prescribed_C': 1.0,
        'gamma': 0.5, 'mu': -0.25, 'q0': 0.0, 'delta': 0.0, 'lam': 0.5,
        'diagnostic_stride': 1, 'snapshot_every': None, 'seed': 0, 'out': 'out',
        'initial': {'profile': 'bump', 'eps': 1e-3, 'r0': 4.0, 'width': 2.0, 'p': None,
                    'pi': 'zero', 'components': None},
        'identities': {'n_values': [2, 3, 4, 5, 6], 'samples': 10000},
        'hardy': {'n': 4, 'ks': [2.5, 3.0, 4.0], 'a': [0.0, 1.0, 3.0],
                  'r_max': 2048.0, 'dr': 0.125},
        'conservation': {'t1': None, 't2': None, 'weighted': True},
        'decay': {'observable': 'dA', 'window': [4.0, 64.0]},
        'gronwall': {'windows': 8, 'C_budget': None},
        'bootstrap': {'E_target': None, 'target_factor': 4.0},
    })

    def __init__(self, data=None):
        """
        Initialize ``self``.
        """
        resolved = _resolve({} if data is None else data, _SCHEMA, self.defaults)
        self._data = MappingProxyType(resolved)
        self.is_valid()

    def is_valid(self) -> bool:
        """
        Return whether the cross-field constraints hold, or raise a
        ``ConfigError``.
        """
        d = self._data
        if d['delta'] != 0:
            raise ConfigError("delta is pinned to 0", path='delta')
        if not 0 <= d['N'] <= N_MAX:
            raise ConfigError("N = %s must lie in [0, %s]" % (d['N'], N_MAX), path='N')
        bound = d['r_max'] - 4 * d['dr']
        if d['t_end'] + d['q0'] >= bound:
            raise ConfigError("t_end + q0 = %r must stay below r_max - 4 dr = %r"
                              % (d['t_end'] + d['q0'], bound), path='t_end')
        weights = self.weights()
        self.sources()
        reach = self.initial().support_radius(d['n'], weights) + d['t_end'] + 8 * d['dr']
        if d['r_max'] < reach:
            raise ConfigError("r_max = %r must be at least r_support + t_end + 8 dr = %r"
                              % (float(d['r_max']), float(reach)), path='initial')
        self.solver_config()
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        d = self._data
        return ("Run configuration (n=%s, mode=%s, t_end=%r, seed=%s)"
                % (d['n'], d['mode'], d['t_end'], d['seed']))

    def __getitem__(self, key):
        return self._data[key]

    def as_dict(self):
        """
        Return a deep copy of the resolved configuration.
        """
        return copy.deepcopy(dict(self._data))

    def content_hash(self):
        """
        Return the SHA-256 digest of the canonical JSON of the
        configuration.

        EXAMPLES::

            sage: from eym_exterior.run_config import RunConfig
            sage: RunConfig({'n': 4}).content_hash() == RunConfig({}).content_hash()
            True
            sage: RunConfig({'seed': 1}).content_hash() == RunConfig({}).content_hash()
            False
        """
        return content_hash(self.as_dict())

    def weights(self):
        """
        Return the :class:`~eym_exterior.weights.WeightParams`.
        """
        d = self._data
        try:
            return WeightParams(gamma=d['gamma'], mu=d['mu'], q0=d['q0'], delta=d['delta'],
                                lam=d['lam'])
        except ValueError as err:
            name = str(err).split(' ')[0]
            raise ConfigError(str(err), path='lam' if name == 'lambda' else name)

    def sources(self):
        """
        Return the :class:`~eym_exterior.sources.SourceConfig`.
        """
        d = self._data
        try:
            return SourceConfig(d['mode'], include_PQG=d['include_PQG'], group=d['group'])
        except ValueError as err:
            raise ConfigError(str(err), path='mode')

    def initial(self):
        """
        Return the :class:`~eym_exterior.initial_data.InitialDataSpec`.
        """
        init = self._data['initial']
        try:
            return InitialDataSpec(init['profile'], eps=init['eps'], r0=init['r0'],
                                   width=init['width'], p=init['p'], pi=init['pi'],
                                   components=init['components'])
        except ValueError as err:
            raise ConfigError(str(err), path='initial')

    def solver_config(self):
        """
        Return the :class:`~eym_exterior.solver.SolverConfig` of the run.
        """
        d = self._data
        try:
            return SolverConfig(n=d['n'], r_max=d['r_max'], dr=d['dr'], cfl=d['cfl'],
                                t_end=d['t_end'], N=d['N'], sources=self.sources(),
                                initial=self.initial(), weights=self.weights(),
                                background=d['background'],
                                prescribed_C=d['prescribed_C'],
                                diagnostic_stride=d['diagnostic_stride'],
                                snapshot_every=d['snapshot_every'])
        except ConfigError:
            raise
        except ValueError as err:
            raise ConfigError(str(err), path='solver')

    def replace(self, **changes):
        """
        Return the configuration with some top-level keys changed.

        EXAMPLES::

            sage: from eym_exterior.run_config import RunConfig
            sage: RunConfig({}).replace(dr=1/16, seed=3)
            Run configuration (n=4, mode=linear, t_end=8.0, seed=3)
        """
        data = self.as_dict()
        for key, value in changes.items():
            if isinstance(value, dict) and isinstance(data.get(key), dict):
                data[key].update(value)
            else:
                data[key] = _plain(value)
        return RunConfig(data)


def load_config(path):
    r"""
    Read and validate the JSON run configuration at ``path``.

    EXAMPLES::

        sage: import os, tempfile
        sage: from eym_exterior.run_config import load_config
        sage: d = tempfile.mkdtemp()
        sage: path = os.path.join(d, 'run.json')
        sage: with open(path, 'w') as f:
        ....:     _ = f.write('{"n": 4, "gamma": 0.5, "mu": -0.25, "initial": {"eps": 0.0}}')
        sage: R = load_config(path); R['initial']['eps'], R['initial']['width']
        (0.0, 2.0)
        sage: load_config(os.path.join(d, 'missing.json'))
        Traceback (most recent call last):
        ...
        ConfigError: cannot read the configuration: ...
        sage: with open(path, 'w') as f:
        ....:     _ = f.write('[1, 2]')
        sage: load_config(path)
        Traceback (most recent call last):
        ...
        ConfigError: expected an object
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except OSError as err:
        raise ConfigError("cannot read the configuration: %s" % err)
    except json.JSONDecodeError as err:
        raise ConfigError("invalid JSON: %s" % err)
    return RunConfig(data)
