r"""
Standard runs

Named run configurations behind the acceptance properties. Each function
returns :class:`~eym_exterior.run_config.RunConfig` objects; pass
``overrides`` to change top-level keys, for instance a shorter horizon.

EXAMPLES::

    sage: from eym_exterior import standard_runs
    sage: coarse, fine = standard_runs.conservation_pair()
    sage: coarse['dr'], fine['dr']
    (0.03125, 0.015625)
    sage: standard_runs.bootstrap_pair()[1]['initial']['eps']
    1.0
    sage: standard_runs.decay_run(t_end=15, r_max=32)['t_end']
    15.0

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

from eym_exterior.run_config import RunConfig


def _config(data, overrides):
    config = RunConfig(data)
    if overrides:
        config = config.replace(**overrides)
    return config


def identities(**overrides):
    """
    Return the configuration of the identity suite: `10^4` jets for each
    `n \\in \\{2, \\dots, 6\\}`.
    """
    return _config({'identities': {'n_values': [2, 3, 4, 5, 6], 'samples': 10000}},
                   overrides)


def conservation_pair(**overrides):
    r"""
    Return the flat linear radial wave in `n = 4` at `\Delta r = 1/32` and
    `1/64`; the normalized residual of the balance law should drop by a
    factor close to `4` between them.
    """
    base = {'n': 4, 'mode': 'linear', 'background': 'flat', 'r_max': 16.0, 't_end': 4.0,
            'N': 0, 'initial': {'profile': 'bump', 'eps': 1e-3, 'r0': 4.0, 'width': 2.0}}
    return tuple(_config(dict(base, dr=dr), overrides) for dr in (1 / 32, 1 / 64))


def decay_run(**overrides):
    r"""
    Return the compact bump free wave in `n = 4` used to fit the decay of
    `|\partial \Phi|` over `1 + t \in [4, 64]`.
    """
    return _config({'n': 4, 'mode': 'linear', 'background': 'flat', 'r_max': 128.0,
                    'dr': 0.25, 't_end': 63.0, 'N': 0, 'diagnostic_stride': 4,
                    'initial': {'profile': 'bump', 'eps': 1e-3, 'r0': 4.0, 'width': 2.0},
                    'decay': {'observable': 'dA', 'window': [4.0, 64.0]}}, overrides)


def hardy_sweep(**overrides):
    r"""
    Return the Hardy sweep over `(1+r)^{-k}`, `k \in \{2.5, 3, 4\}`,
    `a \in \{0, 1, 3\}` with `n = 4` and `\gamma = 1/2`.
    """
    return _config({'gamma': 0.5,
                    'hardy': {'n': 4, 'ks': [2.5, 3.0, 4.0], 'a': [0.0, 1.0, 3.0],
                              'r_max': 2048.0, 'dr': 0.125}}, overrides)


def bootstrap_pair(**overrides):
    r"""
    Return the coupled `su(2)` runs of the bootstrap: the small data
    `\varepsilon = 10^{-3}` and the contrast `\varepsilon = 1`, both with
    `n = 4`, `N = 2`, `q_0 = 2` and `t_{end} = 48`.

    The small run should close with `\mathcal{E}_N \leq 2 \mathcal{E}_N(0)`;
    the contrast run either fails to close or aborts.
    """
    base = {'n': 4, 'mode': 'coupled', 'group': 'su2', 'background': 'evolved',
            'N': 2, 'q0': 2.0, 't_end': 48.0, 'r_max': 64.0, 'dr': 0.25,
            'diagnostic_stride': 4, 'bootstrap': {'E_target': None, 'target_factor': 4.0}}
    return tuple(_config(dict(base, initial={'profile': 'bump', 'eps': eps, 'r0': 4.0,
                                             'width': 2.0}), overrides)
                 for eps in (1e-3, 1.0))
