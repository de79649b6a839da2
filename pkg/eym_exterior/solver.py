r"""
Method of lines solver

Theory
======

Every component `\Phi` of the radial state solves

.. MATH::

    g^{tt} \partial_t^2 \Phi + 2 g^{tr} \partial_t \partial_r \Phi
    + g^{rr} \partial_r^2 \Phi + \frac{n-1}{r} \partial_r \Phi = S_\Phi,

where the angular block of `g` is the identity, so the angular Laplacian
keeps the coefficient `1`. The first order reduction in time evolves
`(\Phi, \Pi = \partial_t \Phi)` with

.. MATH::

    \partial_t \Pi = \frac{1}{g^{tt}} \Big( S_\Phi - 2 g^{tr} \partial_r \Pi
    - g^{rr} \partial_r^2 \Phi - \frac{n-1}{r} \partial_r \Phi \Big),

and `\frac{n-1}{r} \partial_r \Phi` replaced by `(n-1) \partial_r^2 \Phi`
at `r = 0`. The outer edge carries no boundary condition: the same
equation holds there with one-sided stencils, and the configuration
refuses grids where the data could reach `r_{\max}` before `t_{end}`,
i.e. it requires `r_{\max} \geq r_{support} + t_{end} + 8 \Delta r`
(see :meth:`~eym_exterior.initial_data.InitialDataSpec.support_radius`).
Time stepping is the classical four stage Runge-Kutta
method with `\Delta t` tied to `\Delta r` by the CFL factor.

The metric is one of three backgrounds:

- ``'flat'``: Minkowski;
- ``'evolved'``: built from the evolved components `h_{tt}, h_{tr},
  h_{rr}`;
- ``'prescribed'``: the analytic decaying profile of
  :func:`~eym_exterior.geometry.prescribed_ray_metric`.

EXAMPLES::

    sage: from eym_exterior.solver import SolverConfig, evolve
    sage: from eym_exterior.sources import SourceConfig
    sage: from eym_exterior.initial_data import InitialDataSpec
    sage: C = SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0, initial=InitialDataSpec(eps=0))
    sage: run = evolve(C); run
    Run completed at t=2.0 (33 ledger samples)
    sage: float(max(abs(x) for row in run.ledger.rows() for x in row[1:]))
    0.0

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

import hashlib
import json
import math

import numpy as np

from sage.misc.cachefunc import cached_method
from sage.misc.verbose import verbose
from sage.structure.sage_object import SageObject
from sage.structure.unique_representation import UniqueRepresentation
from eym_exterior.exceptions import MetricDegenerate, NonFiniteState, NumericalFailure
from eym_exterior.gauge_algebra import GaugeAlgebra
from eym_exterior.geometry import RayMetric, prescribed_ray_metric, ray_metric_from_h
from eym_exterior.initial_data import InitialDataSpec, initial_field
from eym_exterior.lie_hierarchy import N_MAX
from eym_exterior.radial_grid import RadialGrid, deriv_r2, fd_weights
from eym_exterior.sources import SourceConfig, ray_sources
from eym_exterior.weights import WeightParams

METRIC_NAMES = ('h_tt', 'h_tr', 'h_rr')


class SolverConfig(UniqueRepresentation, SageObject):
    r"""
    All parameters of an evolution.

    INPUT:

    - ``n`` -- (default: ``4``) the space dimension
    - ``r_max``, ``dr`` -- (default: ``64.0``, ``0.125``) the grid
    - ``cfl`` -- (default: ``0.25``) CFL factor in `(0, 0.9]`
    - ``t_end`` -- (default: ``8.0``) the horizon
    - ``N`` -- (default: ``2``) order of the Lie hierarchy, at most `4`
    - ``sources`` -- (default: linear) a
      :class:`~eym_exterior.sources.SourceConfig`
    - ``initial`` -- (default: a bump) an
      :class:`~eym_exterior.initial_data.InitialDataSpec`
    - ``weights`` -- (default: ``WeightParams()``) the weight parameters;
      their ``q0`` is the cutoff of the exterior region
    - ``background`` -- (default: ``'flat'``) ``'flat'``, ``'evolved'`` or
      ``'prescribed'``
    - ``prescribed_C`` -- (default: ``1.0``) the constant of the
      prescribed profile
    - ``diagnostic_stride`` -- (default: ``1``) steps between ledger
      samples
    - ``snapshot_every`` -- (default: ``None``) time between stored
      snapshots; ``None`` keeps the initial and final states only

    EXAMPLES::

        sage: from eym_exterior.solver import SolverConfig
        sage: C = SolverConfig(n=4, r_max=16, dr=1/4, t_end=2); C
        Solver configuration (n=4, dr=0.25, r_max=16.0, t_end=2.0, linear, flat background)
        sage: C.dt(), C.steps()
        (0.0625, 32)
        sage: SolverConfig(r_max=16, dr=1/4, t_end=15)
        Traceback (most recent call last):
        ...
        ValueError: t_end + q0 = 15.0 must stay below r_max - 4 dr = 15.0
        sage: SolverConfig(r_max=64, dr=1/8, t_end=8, initial=InitialDataSpec(r0=55, width=2))
        Traceback (most recent call last):
        ...
        ValueError: r_max = 64.0 must be at least r_support + t_end + 8 dr = 66.0
        sage: SolverConfig(cfl=1)
        Traceback (most recent call last):
        ...
        ValueError: the CFL factor must lie in (0, 0.9]
        sage: SolverConfig(background='evolved', sources=SourceConfig('yang_mills_only'))
        Traceback (most recent call last):
        ...
        ValueError: the evolved background needs the metric components
    """
    backgrounds = ['flat', 'evolved', 'prescribed']

    @staticmethod
    def __classcall__(cls, n=4, r_max=64.0, dr=0.125, cfl=0.25, t_end=8.0, N=2,
                      sources=None, initial=None, weights=None, background='flat',
                      prescribed_C=1.0, diagnostic_stride=1, snapshot_every=None):
        """
        Normalize arguments and set class.
        """
        if sources is None:
            sources = SourceConfig('linear')
        if initial is None:
            initial = InitialDataSpec()
        if weights is None:
            weights = WeightParams()
        if snapshot_every is not None:
            snapshot_every = float(snapshot_every)
        return super().__classcall__(cls, int(n), float(r_max), float(dr), float(cfl),
                                     float(t_end), int(N), sources, initial, weights,
                                     str(background), float(prescribed_C),
                                     int(diagnostic_stride), snapshot_every)

    def __init__(self, n, r_max, dr, cfl, t_end, N, sources, initial, weights,
                 background, prescribed_C, diagnostic_stride, snapshot_every):
        """
        Initialize ``self``.
        """
        self.n = n
        self.r_max = r_max
        self.dr = dr
        self.cfl = cfl
        self.t_end = t_end
        self.N = N
        self.sources = sources
        self.initial = initial
        self.weights = weights
        self.background = background
        self.prescribed_C = prescribed_C
        self.diagnostic_stride = diagnostic_stride
        self.snapshot_every = snapshot_every
        self.is_valid()

    def is_valid(self) -> bool:
        """
        Return whether ``self`` is consistent, or raise a ``ValueError``.
        """
        if not 0 < self.cfl <= 0.9:
            raise ValueError("the CFL factor must lie in (0, 0.9]")
        if not self.t_end > 0:
            raise ValueError("t_end must be positive")
        if not 0 <= self.N <= N_MAX:
            raise ValueError("N must lie in [0, %s]" % N_MAX)
        if self.background not in self.backgrounds:
            raise ValueError("background must be one of %s" % ", ".join(self.backgrounds))
        if self.background == 'evolved' and 'h_tt' not in self.sources.components():
            raise ValueError("the evolved background needs the metric components")
        if self.diagnostic_stride < 1:
            raise ValueError("the diagnostic stride must be positive")
        if self.snapshot_every is not None and not self.snapshot_every > 0:
            raise ValueError("the snapshot cadence must be positive")
        grid = self.grid()
        bound = grid.r_max - 4 * grid.dr
        if self.t_end + self.weights.q0 >= bound:
            raise ValueError("t_end + q0 = %r must stay below r_max - 4 dr = %r"
                             % (self.t_end + self.weights.q0, bound))
        reach = self.initial.support_radius(self.n, self.weights) + self.t_end + 8 * self.dr
        if self.r_max < reach:
            raise ValueError("r_max = %r must be at least r_support + t_end + 8 dr = %r"
                             % (self.r_max, reach))
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Solver configuration (n=%s, dr=%r, r_max=%r, t_end=%r, %s, %s background)"
                % (self.n, self.dr, self.r_max, self.t_end, self.sources.mode,
                   self.background))

    @cached_method
    def grid(self):
        """
        Return the :class:`~eym_exterior.radial_grid.RadialGrid`.
        """
        return RadialGrid(self.n, self.r_max, self.dr)

    def algebra(self):
        """
        Return the gauge algebra.
        """
        return GaugeAlgebra(self.sources.group)

    def components(self):
        """
        Return the names of the evolved components.
        """
        return self.sources.components()

    def steps(self):
        """
        Return the number of time steps.
        """
        return int(math.ceil(self.t_end / (self.cfl * self.dr) - 1e-9))

    def dt(self):
        """
        Return the time step, which divides ``t_end``.
        """
        return self.t_end / self.steps()

    def labels(self):
        """
        Return the labels of the approximations behind every output.
        """
        from eym_exterior.initial_data import FLAT_INITIAL_NORM_LABEL
        from eym_exterior.lie_hierarchy import Z_SUBFAMILY_LABEL
        return self.sources.labels() + [Z_SUBFAMILY_LABEL, FLAT_INITIAL_NORM_LABEL]

    def as_dict(self):
        """
        Return the fully resolved parameters as a JSON-ready dictionary.
        """
        init = self.initial
        return {'n': self.n, 'r_max': self.r_max, 'dr': self.dr, 'cfl': self.cfl,
                't_end': self.t_end, 'N': self.N, 'background': self.background,
                'prescribed_C': self.prescribed_C,
                'diagnostic_stride': self.diagnostic_stride,
                'snapshot_every': self.snapshot_every,
                'sources': {'mode': self.sources.mode, 'group': self.sources.group,
                            'include_PQG': self.sources.include_PQG},
                'initial': {'profile': init.profile, 'eps': init.eps, 'r0': init.r0,
                            'width': init.width, 'p': init.p, 'pi': init.pi,
                            'components': None if init.components is None
                            else list(init.components)},
                'weights': {'gamma': self.weights.gamma, 'mu': self.weights.mu,
                            'q0': self.weights.q0, 'delta': self.weights.delta,
                            'lam': self.weights.lam}}


def content_hash(data):
    """
    Return the SHA-256 hex digest of the canonical JSON of ``data``.

    EXAMPLES::

        sage: from eym_exterior.solver import content_hash
        sage: content_hash({'b': 1, 'a': [1.5]}) == content_hash({'a': [1.5], 'b': 1})
        True
        sage: len(content_hash({}))
        64
    """
    text = json.dumps(data, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()


class WaveSystem(SageObject):
    r"""
    The semi-discrete system of a :class:`SolverConfig`.

    EXAMPLES:

    For the flat metric in one dimension `\partial_t \Pi = \partial_r^2
    \Phi`::

        sage: import numpy as np
        sage: from eym_exterior.solver import SolverConfig, WaveSystem
        sage: S = WaveSystem(SolverConfig(n=1, r_max=8, dr=1/16, t_end=1))
        sage: r = S.grid.points()
        sage: state = S.initial_state()
        sage: phi = np.zeros_like(state.phi); phi[0, :, 0] = np.cos(r)
        sage: state = state.with_data(phi, np.zeros_like(phi), 0)
        sage: dphi, dpi = S.rhs(state)
        sage: bool(np.max(np.abs(dpi[0, :-2, 0] + np.cos(r)[:-2])) < 1e-5)
        True
        sage: dphi, dpi = S.rhs(state.scaled(0))
        sage: float(np.max(np.abs(dpi)))
        0.0
    """
    # classical Runge-Kutta tableau
    RK_A = ((), (0.5,), (0.0, 0.5), (0.0, 0.0, 1.0))
    RK_B = (1 / 6, 1 / 3, 1 / 3, 1 / 6)
    RK_C = (0.0, 0.5, 0.5, 1.0)

    def __init__(self, config):
        """
        Initialize ``self``.
        """
        self.config = config
        self.grid = config.grid()
        self.algebra = config.algebra()
        self.names = config.components()
        self.n = self.grid.n
        r = self.grid.points()
        self._r = r
        self._inv_r = np.where(r > 0, 1.0 / np.where(r > 0, r, 1.0), 0.0)
        self._A = [self.names.index('A_t'), self.names.index('A_r')]
        self._h = ([self.names.index(name) for name in METRIC_NAMES]
                   if 'h_tt' in self.names else None)

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return "Wave system of the %s" % self.config

    def initial_state(self):
        """
        Return the initial :class:`~eym_exterior.component_field.ComponentField`.
        """
        return initial_field(self.config.initial, self.grid, self.algebra, self.names,
                             self.config.weights)

    def metric(self, state):
        """
        Return the :class:`~eym_exterior.geometry.RayMetric` at the time of
        ``state``.
        """
        background = self.config.background
        if background == 'flat':
            return RayMetric.flat(self.grid.J + 1)
        if background == 'prescribed':
            return prescribed_ray_metric(self._r, state.t, self.config.initial.eps,
                                         self.config.prescribed_C,
                                         self.config.weights.gamma, self.n)
        h = state.phi[self._h, :, 0]
        try:
            return ray_metric_from_h(h, state.pi[self._h, :, 0],
                                     state.phi_r()[self._h, :, 0])
        except MetricDegenerate as err:
            raise MetricDegenerate(str(err), time=state.t)

    def ray_arrays(self, state, metric):
        r"""
        Return the arrays ``(A, dA, dh)`` of the ray frame: `A_\mu`,
        `\partial_\lambda A_\mu` and `\partial_\lambda h_{\mu\nu}`.
        """
        A = state.phi[self._A].transpose(1, 0, 2)
        dA = np.stack([state.pi[self._A], state.phi_r()[self._A]]).transpose(2, 0, 1, 3)
        dh = np.zeros((self.grid.J + 1, 2, 2, 2))
        if self._h is not None:
            parts = (state.pi[self._h, :, 0], state.phi_r()[self._h, :, 0])
        elif self.config.background == 'prescribed':
            # h = -m H m to first order
            sign = np.array([-1.0, 1.0, -1.0])
            parts = (sign[:, None] * metric.dH_t, sign[:, None] * metric.dH_r)
        else:
            return A, dA, dh
        for lam, part in enumerate(parts):
            dh[:, lam, 0, 0] = part[0]
            dh[:, lam, 0, 1] = dh[:, lam, 1, 0] = part[1]
            dh[:, lam, 1, 1] = part[2]
        return A, dA, dh

    def sources(self, state, metric=None):
        """
        Return the source array of shape ``(C, J+1, dim)``.
        """
        if metric is None:
            metric = self.metric(state)
        A, dA, dh = self.ray_arrays(state, metric)
        return ray_sources(self.config.sources, self.algebra, self.names, A, dA, dh)

    def rhs(self, state):
        r"""
        Return the pair `(\partial_t \Phi, \partial_t \Pi)`.

        A ``MetricDegenerate`` error is raised when `g^{tt} > -1/2`
        somewhere, and ``NonFiniteState`` when the result is not finite;
        both carry the time of ``state``.

        EXAMPLES:

        The outer edge obeys the same equations as the interior; a power
        tail reaching it is transported, not damped::

            sage: import numpy as np
            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.solver import SolverConfig, WaveSystem
            sage: C = SolverConfig(n=4, r_max=16, dr=1/8, t_end=1, N=0,
            ....:                  initial=InitialDataSpec('power', pi='outgoing'))
            sage: S = WaveSystem(C); state = S.initial_state()
            sage: dphi, dpi = S.rhs(state)
            sage: bool(np.array_equal(dphi, state.pi)), float(np.abs(dphi[:, -1]).max()) > 0
            (True, True)
        """
        t = state.t
        metric = self.metric(state)
        if np.any(metric.gtt > -0.5):
            raise MetricDegenerate("metric degenerate: g^tt = %r > -0.5"
                                   % float(np.max(metric.gtt)), time=t)
        phi_r = state.phi_r()
        pi_r = state.pi_r()
        phi_rr = np.array([deriv_r2(f, self.grid, parity=p)
                           for f, p in zip(state.phi, state.parities)])
        angular = (self.n - 1) * phi_r * self._inv_r[None, :, None]
        angular[:, 0] = (self.n - 1) * phi_rr[:, 0]
        S = self.sources(state, metric)
        gtt = metric.gtt[None, :, None]
        gtr = metric.gtr[None, :, None]
        grr = metric.grr[None, :, None]
        dpi = (S - 2 * gtr * pi_r - grr * phi_rr - angular) / gtt
        dphi = state.pi.copy()
        if not (np.all(np.isfinite(dphi)) and np.all(np.isfinite(dpi))):
            raise NonFiniteState("non-finite state after t=%r" % t, time=t)
        return dphi, dpi

    def step_rk4(self, state, dt):
        r"""
        Return the state at `t + \Delta t` after one Runge-Kutta step.

        ``dt`` may be negative. In the evolved background every stage
        rebuilds the metric from its own `h`.

        EXAMPLES:

        An outgoing pulse in one dimension travels at unit speed::

            sage: import numpy as np
            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.solver import SolverConfig, WaveSystem
            sage: C = SolverConfig(n=1, r_max=16, dr=1/16, t_end=2, N=0,
            ....:                  initial=InitialDataSpec(r0=8, width=1, pi='outgoing'))
            sage: S = WaveSystem(C); state = S.initial_state(); dt = C.dt()
            sage: for _ in range(100):
            ....:     state = S.step_rk4(state, dt)
            sage: r = S.grid.points()
            sage: peak = float(r[np.argmax(state.phi[1, :, 1])])
            sage: abs(peak - (8 + state.t)) <= 2 * C.dr
            True

        Zero data is a fixed point::

            sage: zero = S.initial_state().scaled(0)
            sage: float(np.max(np.abs(S.step_rk4(zero, dt).phi)))
            0.0
        """
        dt = float(dt)
        stages = []
        for a, c in zip(self.RK_A, self.RK_C):
            phi = state.phi + sum((dt * w * k[0] for w, k in zip(a, stages)), np.zeros_like(state.phi))
            pi = state.pi + sum((dt * w * k[1] for w, k in zip(a, stages)), np.zeros_like(state.pi))
            stage = state if not a else state.with_data(phi, pi, state.t + c * dt)
            stages.append(self.rhs(stage))
        phi = state.phi + dt * sum(b * k[0] for b, k in zip(self.RK_B, stages))
        pi = state.pi + dt * sum(b * k[1] for b, k in zip(self.RK_B, stages))
        if not (np.all(np.isfinite(phi)) and np.all(np.isfinite(pi))):
            raise NonFiniteState("non-finite state after t=%r" % state.t, time=state.t)
        return state.with_data(phi, pi, state.t + dt)

    def reverse(self, state):
        r"""
        Return the time reversed state `(\Phi, -\Pi)`.

        EXAMPLES:

        Forward and reversed evolution return to the data::

            sage: import numpy as np
            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.solver import SolverConfig, WaveSystem
            sage: C = SolverConfig(n=4, r_max=16, dr=1/8, t_end=2, N=0,
            ....:                  initial=InitialDataSpec(r0=6, width=2))
            sage: S = WaveSystem(C); u = S.initial_state(); v = u
            sage: for _ in range(8):
            ....:     v = S.step_rk4(v, C.dt())
            sage: v = S.reverse(v)
            sage: for _ in range(8):
            ....:     v = S.step_rk4(v, C.dt())
            sage: v = S.reverse(v)
            sage: bool(np.max(np.abs(v.phi - u.phi)) < 1e-4 * np.max(np.abs(u.phi)))
            True
        """
        return state.with_data(state.phi, -state.pi, state.t)

    def time_jet(self, state, order, dt=None):
        r"""
        Return the array of `\partial_t^k \Phi` for `k \leq` ``order``.

        The first derivative is `\Pi`, the second comes from :meth:`rhs`;
        higher ones are centered differences of `\Pi` over `K = \lfloor
        \mathrm{order}/2 \rfloor + 2` Runge-Kutta steps on each side of
        ``state``.

        EXAMPLES::

            sage: import numpy as np
            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.solver import SolverConfig, WaveSystem
            sage: C = SolverConfig(n=1, r_max=16, dr=1/16, t_end=2,
            ....:                  initial=InitialDataSpec(r0=8, width=2, pi='outgoing'))
            sage: S = WaveSystem(C); u = S.initial_state()
            sage: jet = S.time_jet(u, 3)
            sage: jet.shape
            (4, 5, 257, 3)

        For an outgoing wave in one dimension `\partial_t^3 \Phi = -\partial_r^3
        \Phi`::

            sage: from eym_exterior.radial_grid import deriv_r
            sage: d3 = deriv_r(deriv_r(u.phi_r()[1, :, 0], S.grid, 'odd'), S.grid, 'even')
            sage: bool(np.max(np.abs(jet[3, 1, :, 0] + d3)) < 1e-2 * np.max(np.abs(d3)))
            True
        """
        order = int(order)
        jet = [state.phi, state.pi]
        if order >= 2:
            jet.append(self.rhs(state)[1])
        if order >= 3:
            dt = self.config.dt() if dt is None else float(dt)
            K = order // 2 + 2
            samples = {0: state.pi}
            forward = backward = state
            for j in range(1, K + 1):
                forward = self.step_rk4(forward, dt)
                backward = self.step_rk4(backward, -dt)
                samples[j] = forward.pi
                samples[-j] = backward.pi
            W = fd_weights(0.0, dt * np.arange(-K, K + 1), order - 1)
            stack = np.array([samples[j] for j in range(-K, K + 1)])
            for k in range(3, order + 1):
                jet.append(np.tensordot(W[k - 1], stack, axes=(0, 0)))
        return np.array(jet[:order + 1])

    def with_time_jet(self, state, order):
        """
        Return a copy of ``state`` carrying its time jet up to ``order``.
        """
        return type(state)(state.grid, state.algebra, state.names, state.phi, state.pi,
                           t=state.t, parities=state.parities,
                           time_jet=self.time_jet(state, order))


class RunRecord(SageObject):
    r"""
    The outcome of :func:`evolve`.

    Attributes are ``config``, ``system``, ``ledger`` (an
    :class:`~eym_exterior.diagnostics.EnergyLedger`), ``snapshots`` (a
    dictionary from times to states), ``status`` (``'completed'`` or
    ``'failed'``), ``failure`` (``None`` or a dictionary with the error
    type, message and last good time) and ``seed``.
    """
    def __init__(self, config, system, ledger, snapshots, status, failure=None, seed=None):
        """
        Initialize ``self``.
        """
        self.config = config
        self.system = system
        self.ledger = ledger
        self.snapshots = snapshots
        self.status = status
        self.failure = failure
        self.seed = seed

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        t = self.ledger.times()[-1] if len(self.ledger) else 0.0
        return "Run %s at t=%r (%s ledger samples)" % (self.status, t, len(self.ledger))

    def snapshot(self, t):
        """
        Return the stored state closest in time to ``t``.
        """
        if not self.snapshots:
            raise ValueError("the run stored no snapshots")
        key = min(self.snapshots, key=lambda s: abs(s - float(t)))
        return self.snapshots[key]

    def labels(self):
        return self.config.labels()

    def manifest(self):
        """
        Return the JSON-ready run manifest.

        EXAMPLES::

            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.solver import SolverConfig, evolve
            sage: C = SolverConfig(n=4, r_max=16, dr=1/4, t_end=1, N=0, initial=InitialDataSpec(eps=0))
            sage: M = evolve(C, seed=3).manifest()
            sage: M['status'], M['seed'], M['failure_time'], len(M['config_hash'])
            ('completed', 3, None, 64)
            sage: M['labels']
            ['truncated reduced system', 'Z-subfamily energy', 'flat-D̄ initial norm']
        """
        config = self.config.as_dict()
        failure = self.failure or {}
        grid = self.config.grid()
        return {'config': config,
                'config_hash': content_hash(config),
                'seed': self.seed,
                'grid': {'n': grid.n, 'r_max': grid.r_max, 'dr': grid.dr, 'J': grid.J},
                'dt': self.config.dt(),
                'status': self.status,
                'failure': self.failure,
                'failure_time': failure.get('time'),
                'labels': self.labels()}


def evolve(config, seed=None):
    r"""
    Evolve the data of ``config`` up to ``t_end``.

    The :class:`~eym_exterior.diagnostics.EnergyLedger` records a sample
    every ``diagnostic_stride`` steps. A ``NumericalFailure`` stops the
    evolution; the record then has status ``'failed'`` and the failure
    carries the last good time.

    OUTPUT: a :class:`RunRecord`

    EXAMPLES::

        sage: from eym_exterior.initial_data import InitialDataSpec
        sage: from eym_exterior.sources import SourceConfig
        sage: from eym_exterior.solver import SolverConfig, evolve
        sage: C = SolverConfig(n=4, r_max=16, dr=1/4, t_end=2, N=0, background='evolved',
        ....:                  sources=SourceConfig('coupled'),
        ....:                  initial=InitialDataSpec(eps=1.0, components=['h_tt']))
        sage: run = evolve(C)
        sage: run.status, run.failure['type']
        ('failed', 'MetricDegenerate')
        sage: run.failure['time'] <= 2
        True
    """
    from eym_exterior.diagnostics import EnergyLedger
    system = WaveSystem(config)
    dt = config.dt()
    steps = config.steps()
    ledger = EnergyLedger(config)
    snapshots = {}
    status = 'completed'
    failure = None
    verbose("evolve: %s, %s steps of dt=%r" % (config, steps, dt), level=1)
    state = system.initial_state()
    next_snapshot = 0.0
    try:
        ledger.record(system, state)
        snapshots[state.t] = state
        if config.snapshot_every is not None:
            next_snapshot = config.snapshot_every
        for step in range(1, steps + 1):
            new = system.step_rk4(state, dt)
            state = new.with_data(new.phi, new.pi, step * dt)
            verbose("step %s at t=%r" % (step, state.t), level=3)
            if step % config.diagnostic_stride == 0 or step == steps:
                ledger.record(system, state)
            if config.snapshot_every is not None and state.t >= next_snapshot - 1e-12:
                snapshots[state.t] = state
                next_snapshot += config.snapshot_every
        snapshots[state.t] = state
    except NumericalFailure as err:
        status = 'failed'
        failure = {'type': type(err).__name__, 'message': str(err),
                   'time': err.time if err.time is not None else state.t}
        verbose("evolve failed: %s" % failure, level=1)
    else:
        verbose("evolve completed at t=%r" % state.t, level=1)
    return RunRecord(config, system, ledger, snapshots, status, failure, seed)
