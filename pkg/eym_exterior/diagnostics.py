r"""
Energy diagnostics and inequality verifiers

Theory
======

On the exterior part `\Sigma^{ext}_t = \{ r - t \geq q_0 \}` of a slice the
weighted energy of order `N` is

.. MATH::

    \mathcal{E}_N(t) = \sum_{|I| \leq N} \Big( \| w^{1/2} \partial
    \mathcal{L}_{Z^I} A \|_{L^2(\Sigma^{ext}_t)} + \| w^{1/2} \partial
    \mathcal{L}_{Z^I} h \|_{L^2(\Sigma^{ext}_t)} \Big),

with `|\partial \Phi|^2 = \sum_\mu |\partial_\mu \Phi|^2` and the words
`Z^I` of :func:`~eym_exterior.lie_hierarchy.lie_hierarchy`. Contracting the
stress tensor with `\widetilde{w}(q) \partial_t` and integrating over
`t_1 \leq t \leq t_2`, `t + q_0 \leq r \leq r_{\max}` gives the balance

.. MATH::

    0 = \Big[ \int T_{tt} \widetilde{w} \Big]_{t_1}^{t_2}
    + \iint (T_{tt} + T_{rt}) \widetilde{w}'
    + \iint \partial_\mu T^\mu{}_t \, \widetilde{w}
    + \int_{q = q_0} (T_{tt} + T_{rt}) \widetilde{w}
    - \int_{r = r_{\max}} T_{rt} \widetilde{w},

where the last two terms are the fluxes through the cone and through the
outer boundary. The normalized defect of this balance is the conservation
residual. The flux `T_{tt} + T_{rt}` contains the tangential derivatives
`\frac{1}{2} |\partial_t \Phi + \partial_r \Phi|^2` only, which gives the
space-time integral of tangential derivatives

.. MATH::

    T_{tan}(t_1, t_2) = \int_{t_1}^{t_2} \int_{\Sigma^{ext}_t}
    \frac{1}{2} \Big( |\partial_t \Phi + \partial_r \Phi|^2 + \sum_j
    |(\partial_j - \omega_j \partial_r) \Phi|^2 \Big) \widehat{w}'(q).

The :class:`EnergyLedger` samples these quantities along an evolution;
every verifier reports ratios or fitted constants instead of asserting
values of constants.

EXAMPLES::

    sage: from eym_exterior.initial_data import InitialDataSpec
    sage: from eym_exterior.solver import SolverConfig, evolve
    sage: C = SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=1,
    ....:                  initial=InitialDataSpec(r0=4, width=2))
    sage: run = evolve(C)
    sage: run.ledger
    Energy ledger of 33 samples with levels up to N=1
    sage: E0, E1 = run.ledger.energies(0), run.ledger.energies(1)
    sage: bool((E1 >= E0).all() and E0[-1] <= E0[0])
    True

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

import csv
import math

import numpy as np

from sage.misc.verbose import verbose
from sage.structure.sage_object import SageObject
from eym_exterior.component_field import ComponentField
from eym_exterior.initial_data import initial_norm
from eym_exterior.lie_hierarchy import N_MAX, lie_hierarchy
from eym_exterior.radial_grid import RadialGrid, deriv_r2, integrate_exterior
from eym_exterior.sources import curvature_F_array, curvature_norm
from eym_exterior.stress import (divergence_Tt_array, lift_radial_jet,
                                 stress_Trt_array, stress_Ttt_array,
                                 tangential_split_array)
from eym_exterior.weights import weight_arrays

NOISE_FLOOR = 1e-13

FIT_WINDOW = (4.0, 64.0)

BAND_WIDTH = 4.0

TINY = 1e-30

# growth exp(C eps / (2 lam)) - 1 below this is indistinguishable from a flat series
GROWTH_FLOOR = 1e-6

OBSERVABLES = {'dA': "|d L_Z A|", 'dh': "|d L_Z h|", 'A': "|L_Z A|", 'F': "|F|"}


def _groups(names):
    """
    Return the lists of component indices sharing a name prefix.
    """
    groups = {}
    for c, name in enumerate(names):
        groups.setdefault(name.split('_')[0], []).append(c)
    return list(groups.values())


def exterior_weights(grid, t, q0, params):
    r"""
    Return :func:`~eym_exterior.weights.weight_arrays` on ``grid`` at time
    ``t``, evaluated at `\max(r - t, q_0)`.
    """
    return weight_arrays(np.maximum(grid.points() - t, q0), params)


def _exterior_mask(grid, t, q0):
    r = grid.points()
    return (r >= t + q0) & (r <= grid.r_max - 4 * grid.dr)


def _trapezoid(t, f):
    t = np.asarray(t, dtype=float)
    f = np.asarray(f, dtype=float)
    if len(t) < 2:
        return 0.0
    return float(np.sum(0.5 * (f[1:] + f[:-1]) * np.diff(t)))


def _cumulative(t, f):
    t = np.asarray(t, dtype=float)
    f = np.asarray(f, dtype=float)
    steps = 0.5 * (f[1:] + f[:-1]) * np.diff(t)
    return np.concatenate([[0.0], np.cumsum(steps)])


def _gradient_sq(field, indices):
    return sum(np.sum(field.pi[c] ** 2 + field.phi_r()[c] ** 2, axis=-1) for c in indices)


def _entry_norms(entry, params, q0, gradient=True):
    """
    Return the sum over component groups of the weighted norms of one
    hierarchy entry.
    """
    field = entry.field
    total = 0.0
    for indices in _groups(field.names):
        if gradient:
            density = _gradient_sq(field, indices)
        else:
            density = sum(np.sum(field.phi[c] ** 2, axis=-1) for c in indices)
        value = integrate_exterior(density, field.grid, field.t, q0, weight='w',
                                   params=params)
        total += math.sqrt(entry.norm_weight * value)
    return total


def energy_ext(state, N, params, q0=None, hierarchy=None):
    r"""
    Return the exterior energy `\mathcal{E}_N` of ``state``.

    INPUT:

    - ``state`` -- a :class:`~eym_exterior.component_field.ComponentField`;
      for `N \geq 1` it must carry its time jet
    - ``N`` -- the level
    - ``params`` -- the :class:`~eym_exterior.weights.WeightParams`
    - ``q0`` -- (default: ``params.q0``) the cutoff of the exterior
    - ``hierarchy`` -- (default: computed) the output of
      :func:`~eym_exterior.lie_hierarchy.lie_hierarchy` of order at least
      ``N``

    Components are grouped by the prefix of their names (``A_t``, ``A_r``
    form one group, ``h_tt``, ``h_tr``, ``h_rr`` another) and every group
    contributes one norm per word.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.radial_grid import RadialGrid
        sage: from eym_exterior.component_field import ComponentField
        sage: from eym_exterior.weights import WeightParams
        sage: from eym_exterior.diagnostics import energy_ext
        sage: G = RadialGrid(3, 16, 1/64); r = G.points(); P = WeightParams()
        sage: zero = ComponentField.zero(G, GaugeAlgebra('abelian'), ('u',))
        sage: energy_ext(zero, 0, P)
        0.0

    A unit time derivative on `[2, 6]` where `w = 1`::

        sage: pi_ = np.where((r >= 2) & (r <= 6), 1.0, 0.0)[None, :, None]
        sage: F = ComponentField(G, GaugeAlgebra('abelian'), ('u',), 0 * pi_, pi_, t=10)
        sage: E = energy_ext(F, 0, P, q0=-10)
        sage: exact = 4 * float(pi) * (6**3 - 2**3) / 3
        sage: abs(E**2 / exact - 1) < 0.01
        True
        sage: abs(energy_ext(F.scaled(3), 0, P, q0=-10) / E - 3) < 1e-12
        True
    """
    if q0 is None:
        q0 = params.q0
    N = int(N)
    if hierarchy is None:
        hierarchy = lie_hierarchy(state, state.grid, N)
    return float(sum(_entry_norms(e, params, q0) for e in hierarchy if e.order() <= N))


def _component_terms(system, state, metric, phi_tt):
    """
    Return the pointwise stress quantities of ``state`` summed over the
    components.
    """
    grid = system.grid
    r = grid.points()
    n = grid.n
    phi_r = state.phi_r()
    pi_r = state.pi_r()
    out = {key: np.zeros(grid.J + 1)
           for key in ('Ttt', 'Trt', 'good', 'div', 'grad_sq', 'box_grad')}
    for c, parity in enumerate(state.parities):
        phi_rr = deriv_r2(state.phi[c], grid, parity=parity)
        L = lift_radial_jet(state.pi[c], phi_r[c], phi_tt[c], pi_r[c], phi_rr, r, metric, n)
        d, G = L['d'], L['G']
        out['Ttt'] += stress_Ttt_array(d, G)
        out['Trt'] += stress_Trt_array(d, G, L['omega'])
        out['good'] += tangential_split_array(d, L['H'], L['omega'])[0]
        out['div'] += divergence_Tt_array(d, L['dd'], G, L['dH'])
        grad_sq = np.sum(d * d, axis=(-2, -1))
        box = np.einsum('...ma,...mak->...k', G, L['dd'])
        out['box_grad'] += np.sqrt(np.sum(box * box, axis=-1) * grad_sq)
        out['grad_sq'] += grad_sq
    return out


def _law_terms(grid, terms, t, q0, params, weighted):
    r = grid.points()
    n = grid.n
    flux = terms['Ttt'] + terms['Trt']
    if weighted:
        wt = exterior_weights(grid, t, q0, params)
        w_cone = float(weight_arrays(np.array([q0]), params)['w_tilde'][0])
        w_outer = float(wt['w_tilde'][-1])
        bulk = integrate_exterior(terms['Ttt'], grid, t, q0, weight=wt['w_tilde'])
        wprime = integrate_exterior(flux, grid, t, q0, weight=wt['w_tilde_prime'])
        div = integrate_exterior(terms['div'], grid, t, q0, weight=wt['w_tilde'])
    else:
        w_cone = w_outer = 1.0
        bulk = integrate_exterior(terms['Ttt'], grid, t, q0)
        wprime = 0.0
        div = integrate_exterior(terms['div'], grid, t, q0)
    r_c = t + q0
    cone = 0.0
    if r_c > 0:
        cone = grid.sphere_area * r_c ** (n - 1) * float(np.interp(r_c, r, flux)) * w_cone
    outer = grid.sphere_area * grid.r_max ** (n - 1) * float(terms['Trt'][-1]) * w_outer
    return {'bulk': bulk, 'wprime': wprime, 'div': div, 'cone': cone, 'outer': outer}


def _band_values(system, state, metric, t, q0):
    grid = system.grid
    r = grid.points()
    mask = (r >= t + q0) & (r <= t + q0 + BAND_WIDTH) & (r <= grid.r_max - 4 * grid.dr)
    names = state.names
    band = {'q': (r - t)[mask]}
    A = [c for c, name in enumerate(names) if name.startswith('A_')]
    h = [c for c, name in enumerate(names) if name.startswith('h_')]
    if A:
        band['dA'] = np.sqrt(_gradient_sq(state, A))[mask]
        band['A'] = np.sqrt(sum(np.sum(state.phi[c] ** 2, axis=-1) for c in A))[mask]
    if h:
        band['dh'] = np.sqrt(_gradient_sq(state, h))[mask]
    if 'A_t' in names and 'A_r' in names:
        A_arr, dA, _ = system.ray_arrays(state, metric)
        Ft, AA = curvature_F_array(A_arr, dA, system.algebra.structure_constants())
        band['F'] = np.sqrt(curvature_norm(Ft + AA))[mask]
    return band


class EnergyLedger(SageObject):
    r"""
    Append-only record of the diagnostics of an evolution.

    Every sample holds the energies `\mathcal{E}_0, \dots, \mathcal{E}_N`,
    the terms of the weighted and unweighted balance laws, the density of
    the tangential integral, the terms of the energy estimate, the
    smallness `\max_{ext} \sum |H|` and the decay observables on the
    band `q_0 \leq q \leq q_0 + 4`. The initial norm
    `\overline{\mathcal{E}}_N` is taken at the first sample.

    EXAMPLES::

        sage: from eym_exterior.diagnostics import EnergyLedger
        sage: from eym_exterior.solver import SolverConfig
        sage: L = EnergyLedger(SolverConfig(r_max=16, dr=1/4, t_end=2)); L
        Energy ledger of 0 samples with levels up to N=2
        sage: L.columns()
        ['t', 'E_0', 'E_1', 'E_2', 'T_tan', 'residual', 'flux', 'H_sum']
    """
    def __init__(self, config):
        """
        Initialize ``self``.
        """
        self.config = config
        self.N = config.N
        self.params = config.weights
        self.q0 = config.weights.q0
        self.samples = []
        self.initial_norm = None

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return "Energy ledger of %s samples with levels up to N=%s" % (len(self), self.N)

    def __len__(self):
        return len(self.samples)

    def labels(self):
        return self.config.labels()

    def record(self, system, state):
        r"""
        Append the diagnostics of ``state``.

        The time jet of ``state`` up to order `\max(2, N + 1)` is computed
        with ``system``.
        """
        grid = system.grid
        params = self.params
        q0 = self.q0
        t = state.t
        jet = system.time_jet(state, max(2, self.N + 1))
        field = ComponentField(grid, state.algebra, state.names, state.phi, state.pi, t=t,
                               parities=state.parities, time_jet=jet)
        metric = system.metric(field)
        hierarchy = lie_hierarchy(field, grid, self.N)
        norms = [_entry_norms(e, params, q0) for e in hierarchy]
        energies = [float(sum(x for x, e in zip(norms, hierarchy) if e.order() <= k))
                    for k in range(self.N + 1)]
        terms = _component_terms(system, field, metric, jet[2])
        wt = exterior_weights(grid, t, q0, params)
        smallness = metric.smallness()[_exterior_mask(grid, t, q0)]
        sample = {
            't': t,
            'energies': energies,
            'law': {'weighted': _law_terms(grid, terms, t, q0, params, True),
                    'unweighted': _law_terms(grid, terms, t, q0, params, False)},
            'tan': integrate_exterior(terms['good'], grid, t, q0, weight=wt['w_hat_prime']),
            'estimate': (
                integrate_exterior(metric.smallness() * terms['grad_sq'], grid, t, q0,
                                   weight=wt['w_hat_prime']),
                integrate_exterior(terms['box_grad'], grid, t, q0, weight=wt['w_tilde']),
                integrate_exterior((np.abs(metric.dH_t) + np.abs(metric.dH_r)).sum(axis=0)
                                   * terms['grad_sq'], grid, t, q0, weight=wt['w_tilde'])),
            'H_sum': float(np.max(smallness)) if smallness.size else 0.0,
            'band': _band_values(system, field, metric, t, q0)}
        if not self.samples:
            self.initial_norm = initial_norm(field, self.N, params)
        self.samples.append(sample)
        verbose("ledger t=%r: E=%s, H_sum=%r" % (t, energies, sample['H_sum']), level=2)
        return sample

    def times(self):
        """
        Return the sample times as an array.
        """
        return np.array([s['t'] for s in self.samples])

    def energies(self, k=None):
        r"""
        Return the array of `\mathcal{E}_k` over the samples; ``k``
        defaults to ``N``.
        """
        k = self.N if k is None else int(k)
        return np.array([s['energies'][k] for s in self.samples])

    def index_of(self, t):
        """
        Return the index of the sample closest in time to ``t``.
        """
        if not self.samples:
            raise ValueError("the ledger is empty")
        return int(np.argmin(np.abs(self.times() - float(t))))

    def window(self, t1, t2):
        """
        Return the sample indices closest to ``t1`` and ``t2``.
        """
        if not float(t1) < float(t2):
            raise ValueError("t1 must be smaller than t2")
        i1, i2 = self.index_of(t1), self.index_of(t2)
        if i1 >= i2:
            raise ValueError("the window [%r, %r] holds a single sample" % (t1, t2))
        return i1, i2

    def law_residual(self, i1, i2, weighted=True):
        """
        Return the signed defect of the balance law between the samples
        ``i1`` and ``i2``.
        """
        key = 'weighted' if weighted else 'unweighted'
        window = self.samples[i1:i2 + 1]
        t = [s['t'] for s in window]
        law = [s['law'][key] for s in window]
        return (law[-1]['bulk'] - law[0]['bulk']
                + _trapezoid(t, [x['wprime'] + x['div'] + x['cone'] - x['outer'] for x in law]))

    def columns(self):
        """
        Return the column names of :meth:`rows`.
        """
        return (['t'] + ['E_%s' % k for k in range(self.N + 1)]
                + ['T_tan', 'residual', 'flux', 'H_sum'])

    def rows(self):
        r"""
        Return the time series as a list of tuples.

        ``T_tan`` and ``flux`` accumulate from the first sample; the
        residual is the normalized defect of the weighted balance law on
        the window from the first sample.
        """
        if not self.samples:
            return []
        t = self.times()
        law = [s['law']['weighted'] for s in self.samples]
        tan = _cumulative(t, [s['tan'] for s in self.samples])
        flux = _cumulative(t, [x['cone'] for x in law])
        spacetime = _cumulative(t, [x['wprime'] + x['div'] + x['cone'] - x['outer'] for x in law])
        norm = self.samples[0]['energies'][0] ** 2 + TINY
        rows = []
        for i, s in enumerate(self.samples):
            residual = abs(law[i]['bulk'] - law[0]['bulk'] + spacetime[i]) / norm
            rows.append(tuple([s['t']] + list(s['energies'])
                              + [float(tan[i]), float(residual), float(flux[i]), s['H_sum']]))
        return rows

    def to_csv(self, out):
        r"""
        Write :meth:`rows` as CSV to ``out``, a path or a text file object.

        EXAMPLES::

            sage: import io
            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.solver import SolverConfig, evolve
            sage: C = SolverConfig(n=4, r_max=16, dr=1/4, t_end=1, N=0, initial=InitialDataSpec(eps=0))
            sage: buf = io.StringIO()
            sage: evolve(C).ledger.to_csv(buf)
            sage: print("".join(buf.getvalue().splitlines(True)[:3]), end="")
            t,E_0,T_tan,residual,flux,H_sum
            0,0,0,0,0,0
            0.0625,0,0,0,0,0
        """
        if isinstance(out, str):
            with open(out, 'w', newline='', encoding='utf-8') as handle:
                return self.to_csv(handle)
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(self.columns())
        for row in self.rows():
            writer.writerow(['%.17g' % x for x in row])

    def smallness_ok(self):
        """
        Return whether `\\sum |H| < 1/n` held at every sample.
        """
        n = self.config.n
        return all(s['H_sum'] < 1.0 / n for s in self.samples)


def _ledger(source):
    return getattr(source, 'ledger', source)


def tangential_integral(run, t1, t2):
    r"""
    Return `T_{tan}(t_1, t_2)` by the trapezoid rule over the ledger
    samples of ``run``.

    EXAMPLES::

        sage: from eym_exterior.initial_data import InitialDataSpec
        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import tangential_integral
        sage: run = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0))
        sage: a, b = tangential_integral(run, 0, 1), tangential_integral(run, 1, 2)
        sage: 0 < a and abs(a + b - tangential_integral(run, 0, 2)) < 1e-12 * (a + b)
        True
        sage: tangential_integral(run, 2, 1)
        Traceback (most recent call last):
        ...
        ValueError: t1 must be smaller than t2
    """
    ledger = _ledger(run)
    i1, i2 = ledger.window(t1, t2)
    window = ledger.samples[i1:i2 + 1]
    return _trapezoid([s['t'] for s in window], [s['tan'] for s in window])


def conservation_residual(run, t1, t2, weighted=True):
    r"""
    Return the defect of the balance law on `[t_1, t_2]` normalized by
    `\mathcal{E}_0(t_1)^2`.

    With ``weighted=False`` the weight `\widetilde{w}` is replaced by `1`,
    which is the plain energy balance with cone and outer fluxes.

    EXAMPLES::

        sage: from eym_exterior.initial_data import InitialDataSpec
        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import conservation_residual
        sage: run = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0))
        sage: conservation_residual(run, 0, 2) < 0.05
        True
        sage: conservation_residual(run, 0, 2, weighted=False) < 0.05
        True
        sage: zero = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=1, N=0,
        ....:                            initial=InitialDataSpec(eps=0)))
        sage: conservation_residual(zero, 0, 1)
        0.0
    """
    ledger = _ledger(run)
    i1, i2 = ledger.window(t1, t2)
    norm = ledger.samples[i1]['energies'][0] ** 2 + TINY
    return abs(ledger.law_residual(i1, i2, weighted)) / norm


def hardy_check(field, a, t, q0, params):
    r"""
    Return both sides of the Hardy inequality and their ratio.

    The sides are

    .. MATH::

        \int_{r \geq t + q_0} \frac{w(q) \langle \Phi, \Phi \rangle}
        {(1+t+r)^a (1+|q|)^2} r^{n-1} dr d\sigma, \qquad
        \int_{r \geq t + q_0} \frac{w(q) \langle \partial_r \Phi,
        \partial_r \Phi \rangle}{(1+t+r)^a} r^{n-1} dr d\sigma,

    summed over the components of ``field``, whose values at the last
    grid point must lie below `10^{-8}` times their maximum. The ratio is
    `0` when both sides vanish.

    EXAMPLES:

    For `\Phi = (1+r)^{-k}` with `\gamma = 1/2`, `a = 0` and `t = q_0 = 0`
    the ratio is `1/k^2`::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.radial_grid import RadialGrid
        sage: from eym_exterior.component_field import ComponentField
        sage: from eym_exterior.weights import WeightParams
        sage: from eym_exterior.diagnostics import hardy_check
        sage: G = RadialGrid(4, 2048, 1/8); r = G.points(); P = WeightParams(gamma=0.5)
        sage: phi = ((float(1) + r) ** float(-3))[None, :, None]
        sage: F = ComponentField(G, GaugeAlgebra('abelian'), ('u',), phi, 0 * phi, parities=(None,))
        sage: lhs, rhs, ratio = hardy_check(F, 0, 0, 0, P)
        sage: abs(ratio - 1 / 9) < 1e-3
        True
        sage: hardy_check(F.scaled(0), 0, 0, 0, P)
        (0.0, 0.0, 0.0)
        sage: slow = ComponentField(G, GaugeAlgebra('abelian'), ('u',), np.ones_like(phi), 0 * phi, parities=(None,))
        sage: hardy_check(slow, 0, 0, 0, P)
        Traceback (most recent call last):
        ...
        ValueError: insufficient decay at the grid edge
        sage: hardy_check(F, 4, 0, 0, P)
        Traceback (most recent call last):
        ...
        ValueError: the exponent a must lie in [0, n-1]
    """
    grid = field.grid
    n = grid.n
    a = float(a)
    t = float(t)
    if not 0 <= a <= n - 1:
        raise ValueError("the exponent a must lie in [0, n-1]")
    size = float(np.max(np.abs(field.phi)))
    edge = float(np.max(np.abs(field.phi[:, -1])))
    if size > 0 and edge >= 1e-8 * size:
        raise ValueError("insufficient decay at the grid edge")
    r = grid.points()
    q = r - t
    factor = exterior_weights(grid, t, q0, params)['w'] / (1 + t + r) ** a
    values = np.sum(field.phi ** 2, axis=(0, 2))
    slopes = np.sum(field.phi_r() ** 2, axis=(0, 2))
    lhs = integrate_exterior(values * factor / (1 + np.abs(q)) ** 2, grid, t, q0)
    rhs = integrate_exterior(slopes * factor, grid, t, q0)
    ratio = lhs / rhs if rhs > 0 else 0.0
    return (lhs, rhs, ratio)


def hardy_sweep(n=4, ks=(2.5, 3.0, 4.0), a_values=(0.0, 1.0, 3.0), params=None,
                r_max=2048.0, dr=0.125):
    r"""
    Return the Hardy ratios of the family `(1+r)^{-k}` on a grid and its
    refinement.

    OUTPUT: a dictionary with one record per pair ``(k, a)`` holding the
    ratios at ``dr`` and ``dr/2`` and their relative drift, together with
    the largest ratio over the sweep.

    EXAMPLES::

        sage: from eym_exterior.diagnostics import hardy_sweep
        sage: S = hardy_sweep(ks=(3.0,), a_values=(0.0,), r_max=512)
        sage: rec = S['records'][0]
        sage: rec['k'], rec['a'], abs(rec['ratio'] - 1 / 9) < 1e-3, rec['drift'] < 0.01
        (3.0, 0.0, True, True)
    """
    from eym_exterior.gauge_algebra import GaugeAlgebra
    from eym_exterior.weights import WeightParams
    if params is None:
        params = WeightParams(gamma=0.5)
    algebra = GaugeAlgebra('abelian')
    coarse = RadialGrid(n, r_max, dr)
    records = []
    for k in ks:
        ratios = []
        for grid in (coarse, coarse.refine()):
            r = grid.points()
            phi = ((1 + r) ** -float(k))[None, :, None]
            field = ComponentField(grid, algebra, ('u',), phi, np.zeros_like(phi),
                                   parities=(None,))
            ratios.append([hardy_check(field, a, 0.0, 0.0, params)[2] for a in a_values])
        for j, a in enumerate(a_values):
            fine, base = ratios[1][j], ratios[0][j]
            drift = abs(base - fine) / fine if fine else 0.0
            records.append({'k': float(k), 'a': float(a), 'ratio': base,
                            'ratio_refined': fine, 'drift': drift})
        verbose("hardy sweep k=%r: %s" % (k, ratios[0]), level=2)
    return {'n': n, 'gamma': params.gamma, 'records': records,
            'max_ratio': max(rec['ratio'] for rec in records),
            'max_drift': max(rec['drift'] for rec in records)}


def _snapshot_and_energy(run, t):
    state = run.snapshot(t)
    ledger = run.ledger
    return state, ledger.samples[ledger.index_of(state.t)]['energies'][-1]


def apriori_check(run, t):
    r"""
    Return the ratios of the pointwise decay bounds at the snapshot of
    ``run`` closest to ``t``.

    The ratios are the maxima over the exterior of

    .. MATH::

        \frac{|\partial \Phi| (1+t+|q|)^{(n-1)/2} (1+|q|)^{1+\gamma}}
        {\mathcal{E}_N}, \qquad
        \frac{|\Phi| (1+t+|q|)^{(n-1)/2} (1+|q|)^{\gamma}}{\mathcal{E}_N}.

    EXAMPLES::

        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import apriori_check
        sage: run = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0))
        sage: R = apriori_check(run, 2)
        sage: R['t'], 0 < R['gradient_ratio'] < 100, 0 < R['field_ratio'] < 100
        (2.0, True, True)
    """
    state, E = _snapshot_and_energy(run, t)
    grid = state.grid
    n = grid.n
    gamma = run.config.weights.gamma
    t = state.t
    r = grid.points()
    q = np.abs(r - t)
    mask = _exterior_mask(grid, t, run.config.weights.q0)
    grad = np.sqrt(_gradient_sq(state, range(len(state.names))))
    value = np.sqrt(np.sum(state.phi ** 2, axis=(0, 2)))
    growth = (1 + t + q) ** ((n - 1) / 2)
    if E > 0 and mask.any():
        grad_ratio = float(np.max((grad * growth * (1 + q) ** (1 + gamma))[mask])) / E
        field_ratio = float(np.max((value * growth * (1 + q) ** gamma)[mask])) / E
    else:
        grad_ratio = field_ratio = 0.0
    return {'t': t, 'E_N': float(E), 'gradient_ratio': grad_ratio,
            'field_ratio': field_ratio}


def ks_check(run, t, level=None):
    r"""
    Return the largest ratio of the weighted Klainerman-Sobolev inequality
    at the snapshot of ``run`` closest to ``t``.

    The ratio at an exterior point is

    .. MATH::

        \frac{|\Phi| (1+t+|q|)^{(n-1)/2} ((1+|q|) w(q))^{1/2}}
        {\sum_{|I| \leq \ell} \| w^{1/2} Z^I \Phi \|},

    with `\ell` = ``level``, by default `\lfloor n/2 \rfloor + 1`, and the
    words of the implemented hierarchy.

    EXAMPLES::

        sage: from eym_exterior.initial_data import InitialDataSpec
        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import ks_check
        sage: runs = [evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=1, N=0,
        ....:                             initial=InitialDataSpec(eps=e)))
        ....:         for e in (1e-3, 2e-3, 0)]
        sage: a, b, c = [ks_check(run, 1) for run in runs]
        sage: 0 < a and abs(a - b) < 1e-10 * a, c
        (True, 0.0)
    """
    state = run.snapshot(t)
    system = run.system
    grid = state.grid
    n = grid.n
    params = run.config.weights
    q0 = params.q0
    if level is None:
        level = n // 2 + 1
    level = int(level)
    if level > N_MAX:
        raise ValueError("level %s exceeds the stencil accuracy budget N_max = %s"
                         % (level, N_MAX))
    field = system.with_time_jet(state, level + 1)
    entries = lie_hierarchy(field, grid, level)
    total = sum(_entry_norms(e, params, q0, gradient=False) for e in entries)
    t = state.t
    r = grid.points()
    q = r - t
    mask = _exterior_mask(grid, t, q0)
    if total <= 0 or not mask.any():
        return 0.0
    w = weight_arrays(q, params)['w']
    value = np.sqrt(np.sum(state.phi ** 2, axis=(0, 2)))
    lhs = value * (1 + t + np.abs(q)) ** ((n - 1) / 2) * np.sqrt((1 + np.abs(q)) * w)
    return float(np.max(lhs[mask])) / total


def decay_fit_samples(t, q, values, window=FIT_WINDOW):
    r"""
    Fit `\log |u| = c - p_t \log(1+t+|q|) - p_q \log(1+|q|)` by least
    squares.

    INPUT:

    - ``t``, ``q``, ``values`` -- arrays of the same length
    - ``window`` -- (default: ``(4, 64)``) the range of `1+t` used

    Samples below the noise floor `10^{-13}` are dropped.

    OUTPUT: a dictionary with the exponents ``p_t``, ``p_q``, their
    standard errors and the number of samples used

    EXAMPLES:

    An exact profile is recovered::

        sage: import numpy as np
        sage: from eym_exterior.diagnostics import decay_fit_samples
        sage: T, Q = np.meshgrid(np.linspace(3, 63, 31), np.linspace(0, 4, 9))
        sage: u = (float(1) + T + Q) ** float(-1.5) * (float(1) + Q) ** float(-1.5)
        sage: fit = decay_fit_samples(T.ravel(), Q.ravel(), u.ravel())
        sage: abs(fit['p_t'] - 1.5) < 1e-8, abs(fit['p_q'] - 1.5) < 1e-8, fit['samples']
        (True, True, 279)
        sage: fit = decay_fit_samples(T.ravel(), Q.ravel(), np.full(u.size, float(2)))
        sage: abs(fit['p_t']) < 1e-8
        True
        sage: decay_fit_samples(T.ravel(), Q.ravel(), np.zeros(u.size))
        Traceback (most recent call last):
        ...
        ValueError: observable below the noise floor 1e-13
    """
    t = np.asarray(t, dtype=float)
    q = np.abs(np.asarray(q, dtype=float))
    values = np.abs(np.asarray(values, dtype=float))
    lo, hi = window
    keep = ((1 + t >= lo) & (1 + t <= hi) & np.isfinite(values)
            & (values > NOISE_FLOOR))
    if np.count_nonzero(keep) < 4:
        raise ValueError("observable below the noise floor %r" % NOISE_FLOOR)
    t, q, values = t[keep], q[keep], values[keep]
    X = np.column_stack([np.ones_like(t), -np.log(1 + t + q), -np.log(1 + q)])
    y = np.log(values)
    coef, _, rank, _ = np.linalg.lstsq(X, y, rcond=None)
    m = len(y)
    resid = y - X @ coef
    if m > 3 and rank == 3:
        cov = float(resid @ resid) / (m - 3) * np.linalg.inv(X.T @ X)
        errors = np.sqrt(np.abs(np.diag(cov)))
    else:
        errors = np.full(3, float('inf'))
    return {'p_t': float(coef[1]), 'p_q': float(coef[2]),
            'p_t_error': float(errors[1]), 'p_q_error': float(errors[2]),
            'samples': int(m)}


def decay_fit(run, observable='dA', window=FIT_WINDOW):
    r"""
    Fit the decay exponents of an observable on the band `q_0 \leq q \leq
    q_0 + 4` over the ledger of ``run``.

    INPUT:

    - ``observable`` -- ``'dA'`` (`|\partial A|`), ``'dh'``
      (`|\partial h|`), ``'A'`` (`|A|`) or ``'F'`` (`|F|`), all taken on
      the first entry of the hierarchy
    - ``window`` -- (default: ``(4, 64)``) the range of `1+t`

    The fit is pre-asymptotic: the window spans less than two decades.

    EXAMPLES::

        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import decay_fit
        sage: run = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0))
        sage: decay_fit(run, 'dA', window=(1, 3))['samples'] > 100
        True
        sage: decay_fit(run, 'curvature')
        Traceback (most recent call last):
        ...
        ValueError: unknown observable 'curvature'
    """
    if observable not in OBSERVABLES:
        raise ValueError("unknown observable %r" % (observable,))
    ledger = _ledger(run)
    t, q, values = [], [], []
    for s in ledger.samples:
        band = s['band']
        if observable not in band:
            raise ValueError("the run has no components for %r" % (observable,))
        t.append(np.full(len(band['q']), s['t']))
        q.append(band['q'])
        values.append(band[observable])
    fit = decay_fit_samples(np.concatenate(t), np.concatenate(q), np.concatenate(values),
                            window)
    fit.update({'observable': OBSERVABLES[observable], 'window': list(window),
                'band': [ledger.q0, ledger.q0 + BAND_WIDTH], 'regime': 'pre-asymptotic'})
    return fit


def energy_estimate_check(run, t1, t2):
    r"""
    Return both sides of the weighted energy estimate on `[t_1, t_2]` and
    their ratio.

    The sides are `\mathcal{E}_0(t_2)^2 + T_{tan}(t_1, t_2)` and

    .. MATH::

        \mathcal{E}_0(t_1)^2 + \int_{t_1}^{t_2} \int_{\Sigma^{ext}_t} \Big(
        |H| |\partial \Phi|^2 \widehat{w}' + |g \partial \partial \Phi|
        |\partial \Phi| \widetilde{w} + |\partial H| |\partial \Phi|^2
        \widetilde{w} \Big).

    EXAMPLES::

        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import energy_estimate_check
        sage: run = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0))
        sage: lhs, rhs, ratio = energy_estimate_check(run, 0, 2)
        sage: 0 < ratio < 2
        True
    """
    ledger = _ledger(run)
    i1, i2 = ledger.window(t1, t2)
    window = ledger.samples[i1:i2 + 1]
    times = [s['t'] for s in window]
    lhs = window[-1]['energies'][0] ** 2 + tangential_integral(ledger, t1, t2)
    rhs = window[0]['energies'][0] ** 2 + _trapezoid(times, [sum(s['estimate']) for s in window])
    return (lhs, rhs, lhs / rhs if rhs > 0 else 0.0)


def gronwall_bound(E0, C, eps, lam):
    r"""
    Return the bound `E_0 \exp(C \varepsilon / (2 \lambda))` of `E(t)`
    implied by the integrated Grönwall inequality.

    EXAMPLES::

        sage: from eym_exterior.diagnostics import gronwall_bound
        sage: gronwall_bound(2, 0, 1e-3, 0.5)
        2.0
        sage: abs(gronwall_bound(1, 1000, 1e-3, 0.5) - float(e)) < 1e-12
        True
    """
    return float(E0) * math.exp(float(C) * float(eps) / (2 * float(lam)))


def _window_constants(t, E, eps, lam, windows):
    m = len(t)
    edges = sorted(set(int(round(x)) for x in np.linspace(0, m - 1, windows + 1)))
    E2 = E * E
    forcing = eps * (1 + t) ** (-1 - lam) * E2
    constants = []
    for i, j in zip(edges[:-1], edges[1:]):
        gain = E2[j] - E2[i]
        room = _trapezoid(t[i:j + 1], forcing[i:j + 1])
        if gain <= 0:
            constants.append(0.0)
        elif room > 0:
            constants.append(gain / room)
        else:
            constants.append(float('inf'))
    return constants


def gronwall_monitor(ledger, lam=None, eps=None, windows=8, C_budget=None):
    r"""
    Fit the smallest Grönwall constant of an energy series.

    For every window `[t_1, t_2]` the constant is

    .. MATH::

        C = \max\Big(0, \frac{E^2(t_2) - E^2(t_1)}{\int_{t_1}^{t_2}
        \varepsilon (1+\tau)^{-1-\lambda} E^2(\tau) \, d\tau}\Big).

    INPUT:

    - ``ledger`` -- an :class:`EnergyLedger`, a run, or a pair of arrays
      ``(t, E)``; ledgers use `\mathcal{E}_N`
    - ``lam``, ``eps`` -- (default: from the configuration of the ledger)
      `\lambda` and `\varepsilon`
    - ``windows`` -- (default: ``8``) the number of windows
    - ``C_budget`` -- (default: ``None``) an upper bound on admissible
      constants

    OUTPUT:

    A dictionary with the constants per window, their supremum ``C``, the
    supremum ``C_half`` on every other sample, the verdict ``'closes'``
    when ``C`` is finite, within a factor `2` of ``C_half`` (or so small that
    the bound grows by less than :data:`GROWTH_FLOOR`) and within the
    budget (``'does not close'`` otherwise), and whether the series stays
    under :func:`gronwall_bound`.

    EXAMPLES:

    The series `E^2 = 2 - (1+t)^{-\lambda}` saturates the inequality with
    `C = \lambda / (\varepsilon (2 - (a_1 + a_2)/2))`, `a = (1+t)^{-\lambda}`::

        sage: import numpy as np
        sage: from eym_exterior.diagnostics import gronwall_monitor
        sage: t = np.linspace(0, 16, 161); lam, eps = float(0.5), float(1e-3)
        sage: E = np.sqrt(float(2) - (float(1) + t) ** -lam)
        sage: R = gronwall_monitor((t, E), lam=lam, eps=eps)
        sage: a = (float(1) + t[::20]) ** -lam
        sage: exact = lam / (eps * (float(2) - (a[:-1] + a[1:]) / float(2)))
        sage: bool(np.all(np.abs(np.array(R['window_constants']) / exact - float(1)) < float(0.05)))
        True
        sage: R['verdict'], R['bound_ok']
        ('closes', True)
        sage: gronwall_monitor((t, np.ones_like(t)), lam=lam, eps=eps)['C']
        0.0
        sage: gronwall_monitor((t, np.sqrt(float(1) + t)), lam=lam, eps=eps, C_budget=10)['verdict']
        'does not close'
        sage: gronwall_monitor((t[:5], E[:5]), lam=lam, eps=eps)
        Traceback (most recent call last):
        ...
        ValueError: the Grönwall monitor needs at least 8 samples
    """
    if isinstance(ledger, tuple):
        t, E = (np.asarray(x, dtype=float) for x in ledger)
        labels = []
    else:
        ledger = _ledger(ledger)
        t, E = ledger.times(), ledger.energies()
        config = ledger.config
        lam = config.weights.lam if lam is None else lam
        eps = config.initial.eps if eps is None else eps
        labels = ledger.labels()
    if lam is None or eps is None:
        raise ValueError("lam and eps are needed for a bare series")
    if len(t) < 8:
        raise ValueError("the Grönwall monitor needs at least 8 samples")
    lam = float(lam)
    eps = abs(float(eps))
    if eps == 0:
        eps = 1.0
    constants = _window_constants(t, E, eps, lam, windows)
    C = max(constants)
    C_half = max(_window_constants(t[::2], E[::2], eps, lam, windows))
    finite = math.isfinite(C) and math.isfinite(C_half)
    if max(C, C_half) * eps / (2 * lam) <= GROWTH_FLOOR:
        stable = True
    else:
        stable = finite and max(C, C_half) <= 2 * min(C, C_half)
    within = C_budget is None or C <= C_budget
    verdict = 'closes' if finite and stable and within else 'does not close'
    bound_ok = bool(finite and np.all(E <= gronwall_bound(E[0], C, eps, lam) * (1 + 1e-12)))
    verbose("Grönwall monitor: C=%r, C_half=%r, %s" % (C, C_half, verdict), level=1)
    return {'C': C, 'C_half': C_half, 'window_constants': constants, 'stable': stable,
            'C_budget': C_budget, 'verdict': verdict, 'bound_ok': bound_ok,
            'lam': lam, 'eps': eps, 'labels': labels}


def minimal_bootstrap_level(n):
    r"""
    Return the smallest level `2 \lfloor n/2 \rfloor + 2` at which the
    bootstrap closes.

    EXAMPLES::

        sage: from eym_exterior.diagnostics import minimal_bootstrap_level
        sage: [minimal_bootstrap_level(n) for n in (4, 5, 6)]
        [6, 6, 8]
    """
    return 2 * (int(n) // 2) + 2


def bootstrap_level(N, n):
    r"""
    Return `\lfloor N/2 \rfloor + \lfloor n/2 \rfloor + 1`, the order up
    to which pointwise bounds follow from `\mathcal{E}_N`.

    EXAMPLES::

        sage: from eym_exterior.diagnostics import bootstrap_level
        sage: bootstrap_level(2, 4), bootstrap_level(6, 4)
        (4, 6)
    """
    return int(N) // 2 + int(n) // 2 + 1


def bootstrap_report(ledger, E_target):
    r"""
    Return the verdict of the bootstrap on the energies `\mathcal{E}_N` of
    ``ledger``.

    The verdict is ``'closed'`` when `\mathcal{E}_N(t) \leq E` for all
    samples and `\mathcal{E}_N(t) \leq E/2` for `t > 1`, with `E` =
    ``E_target``; otherwise it is ``'not closed'``.

    EXAMPLES::

        sage: from eym_exterior.initial_data import InitialDataSpec
        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: from eym_exterior.diagnostics import bootstrap_report
        sage: zero = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0,
        ....:                            initial=InitialDataSpec(eps=0)))
        sage: R = bootstrap_report(zero, 1.0)
        sage: R['verdict'], R['margin'], R['N_sufficient']
        ('closed', 1.0, False)
        sage: run = evolve(SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0))
        sage: bootstrap_report(run, run.ledger.energies()[0] / 2)['verdict']
        'not closed'
    """
    ledger = _ledger(ledger)
    if not len(ledger):
        raise ValueError("the ledger is empty")
    E_target = float(E_target)
    t = ledger.times()
    E = ledger.energies()
    late = E[t > 1]
    max_E = float(np.max(E))
    max_late = float(np.max(late)) if late.size else 0.0
    closed = max_E <= E_target and max_late <= E_target / 2
    n = ledger.config.n
    return {'verdict': 'closed' if closed else 'not closed',
            'E_target': E_target, 'max_E': max_E, 'margin': E_target - max_E,
            'max_E_late': max_late, 'late_margin': E_target / 2 - max_late,
            'N': ledger.N, 'minimal_level': minimal_bootstrap_level(n),
            'N_sufficient': ledger.N >= minimal_bootstrap_level(n),
            'pointwise_level': bootstrap_level(ledger.N, n),
            'initial_norm': ledger.initial_norm, 'labels': ledger.labels()}
