r"""
Initial data

Radial initial data are built from one of two profiles:

- ``'bump'``: `f(r) = \varepsilon (1 - u^2)^4` for `|u| < 1`, `u = (r -
  r_0)/s`, and `0` elsewhere, a `C^3` bump of support `[r_0 - s, r_0 + s]`;
- ``'power'``: `f(r) = \varepsilon (1 + r^2)^{-p/2}` with `p` defaulting
  to `(n-1)/2 + \gamma + 1`.

The support radius of the power profile, used to size the grid, is where
it falls to :data:`TAIL_FRACTION` of its peak.

The time derivative is either zero or the outgoing choice
`\partial_t \Phi = -\partial_r \Phi - \frac{n-1}{2r} \Phi`.

The norm of the data is the weighted Sobolev norm on the initial slice

.. MATH::

    \overline{\mathcal{E}}_N = \sum_{k \leq N} \Big( \| (1+r)^{1/2 +
    \gamma + k} \partial_r^{k+1} A_r \| + \| (1+r)^{1/2 + \gamma + k}
    \partial_r^{k+1} h_{rr} \| \Big),

computed with flat derivatives in place of the covariant derivative of the
initial metric; outputs using it carry :data:`FLAT_INITIAL_NORM_LABEL`.

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

import math

import numpy as np

from sage.structure.sage_object import SageObject
from sage.structure.unique_representation import UniqueRepresentation
from eym_exterior.component_field import ComponentField
from eym_exterior.radial_grid import deriv_r, integrate_exterior
from eym_exterior.weights import WeightParams

FLAT_INITIAL_NORM_LABEL = "flat-D̄ initial norm"
TAIL_FRACTION = 1e-3


class InitialDataSpec(UniqueRepresentation, SageObject):
    r"""
    Profile, amplitude and time derivative of the initial data.

    INPUT:

    - ``profile`` -- (default: ``'bump'``) ``'bump'`` or ``'power'``
    - ``eps`` -- (default: ``1e-3``) the amplitude `\varepsilon`
    - ``r0``, ``width`` -- (default: ``4.0``, ``2.0``) center and half
      width of the bump
    - ``p`` -- (default: ``None``) decay exponent of the power profile;
      ``None`` selects `(n-1)/2 + \gamma + 1`
    - ``pi`` -- (default: ``'zero'``) ``'zero'`` or ``'outgoing'``
    - ``components`` -- (default: ``None`` for all) names of the
      components carrying data

    EXAMPLES::

        sage: from eym_exterior.initial_data import InitialDataSpec
        sage: InitialDataSpec()
        Initial data (bump, eps=0.001, r0=4.0, width=2.0, pi=zero)
        sage: InitialDataSpec('power', eps=1/10)
        Initial data (power, eps=0.1, p=None, pi=zero)
        sage: InitialDataSpec(r0=1, width=2)
        Traceback (most recent call last):
        ...
        ValueError: a bump must be centered at 0 or vanish near the origin
        sage: InitialDataSpec(eps=float('nan'))
        Traceback (most recent call last):
        ...
        ValueError: eps must be finite
    """
    profiles = ['bump', 'power']

    @staticmethod
    def __classcall__(cls, profile='bump', eps=1e-3, r0=4.0, width=2.0, p=None,
                      pi='zero', components=None):
        """
        Normalize arguments and set class.
        """
        if p is not None:
            p = float(p)
        if components is not None:
            components = tuple(str(c) for c in components)
        return super().__classcall__(cls, str(profile), float(eps), float(r0),
                                     float(width), p, str(pi), components)

    def __init__(self, profile, eps, r0, width, p, pi, components):
        """
        Initialize ``self``.
        """
        self.profile = profile
        self.eps = eps
        self.r0 = r0
        self.width = width
        self.p = p
        self.pi = pi
        self.components = components
        self.is_valid()

    def is_valid(self) -> bool:
        """
        Return whether ``self`` is consistent, or raise a ``ValueError``.
        """
        if self.profile not in self.profiles:
            raise ValueError("profile must be 'bump' or 'power'")
        if not math.isfinite(self.eps):
            raise ValueError("eps must be finite")
        if self.pi not in ('zero', 'outgoing'):
            raise ValueError("pi must be 'zero' or 'outgoing'")
        if self.profile == 'bump':
            if not (self.width > 0 and self.r0 >= 0):
                raise ValueError("the bump needs r0 >= 0 and a positive width")
            if 0 < self.r0 < self.width:
                raise ValueError("a bump must be centered at 0 or vanish near the origin")
        elif self.p is not None and not self.p > 0:
            raise ValueError("the decay exponent must be positive")
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        if self.profile == 'bump':
            shape = "r0=%r, width=%r" % (self.r0, self.width)
        else:
            shape = "p=%r" % (self.p,)
        return "Initial data (%s, eps=%r, %s, pi=%s)" % (self.profile, self.eps, shape, self.pi)

    def decay_exponent(self, n, params):
        r"""
        Return the exponent `p` of the power profile.

        EXAMPLES::

            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.weights import WeightParams
            sage: InitialDataSpec('power').decay_exponent(4, WeightParams(gamma=0.5))
            3.0
        """
        if self.p is not None:
            return self.p
        return (n - 1) / 2 + params.gamma + 1

    def support_radius(self, n, params):
        r"""
        Return the radius outside of which the data count as zero.

        For the bump this is `r_0 + s`. The power profile never vanishes;
        its support ends where `(1 + r^2)^{-p/2}` falls to
        :data:`TAIL_FRACTION` of its peak.

        EXAMPLES::

            sage: from eym_exterior.initial_data import InitialDataSpec
            sage: from eym_exterior.weights import WeightParams
            sage: InitialDataSpec(r0=55, width=2).support_radius(4, WeightParams())
            57.0
            sage: round(InitialDataSpec('power').support_radius(4, WeightParams(gamma=0.5)), 4)
            9.9499
        """
        if self.profile == 'bump':
            return self.r0 + self.width
        p = self.decay_exponent(n, params)
        return math.sqrt(TAIL_FRACTION ** (-2 / p) - 1)

    def profile_values(self, r, n, params):
        r"""
        Return the arrays `(f, f')` of the profile on the points ``r``.
        """
        r = np.asarray(r, dtype=float)
        if self.profile == 'bump':
            u = (r - self.r0) / self.width
            inside = np.abs(u) < 1
            base = np.where(inside, 1 - u * u, 0.0)
            f = self.eps * base ** 4
            f_r = self.eps * 4 * base ** 3 * (-2 * u / self.width)
            return f, np.where(inside, f_r, 0.0)
        p = self.decay_exponent(n, params)
        s = 1 + r * r
        return self.eps * s ** (-p / 2), -self.eps * p * r * s ** (-p / 2 - 1)


def initial_field(spec, grid, algebra, names, params=None):
    r"""
    Return the initial :class:`~eym_exterior.component_field.ComponentField`
    at `t = 0`.

    The component number `c` points along the basis vector
    `e_{c \bmod d}` of the gauge algebra; metric components use slot `0`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.radial_grid import RadialGrid
        sage: from eym_exterior.initial_data import InitialDataSpec, initial_field
        sage: G = RadialGrid(4, 16, 1/8)
        sage: F = initial_field(InitialDataSpec(components=['A_r']), G, GaugeAlgebra('su2'), ('A_t', 'A_r'))
        sage: F
        Component field (A_t, A_r) on 129 points at t=0.0
        sage: float(F.phi[1, G.index_of(4), 1]), float(np.max(np.abs(F.phi[0])))
        (0.001, 0.0)
        sage: initial_field(InitialDataSpec(r0=15), G, GaugeAlgebra('su2'), ('A_t',))
        Traceback (most recent call last):
        ...
        ValueError: the bump support leaves the grid
    """
    if params is None:
        params = WeightParams()
    if spec.profile == 'bump' and spec.r0 + spec.width > grid.r_max - 4 * grid.dr:
        raise ValueError("the bump support leaves the grid")
    r = grid.points()
    n = grid.n
    f, f_r = spec.profile_values(r, n, params)
    if spec.pi == 'outgoing':
        safe = np.where(r > 0, r, 1.0)
        g = -f_r - np.where(r > 0, (n - 1) / (2 * safe) * f, 0.0)
    else:
        g = np.zeros_like(f)
    dim = algebra.dimension()
    phi = np.zeros((len(names), grid.J + 1, dim))
    pi = np.zeros_like(phi)
    for c, name in enumerate(names):
        if spec.components is not None and name not in spec.components:
            continue
        slot = 0 if name.startswith('h_') else c % dim
        phi[c, :, slot] = f
        pi[c, :, slot] = g
    return ComponentField(grid, algebra, names, phi, pi, t=0.0)


def initial_norm(field, N, params):
    r"""
    Return the weighted norm `\overline{\mathcal{E}}_N` of the data.

    Only the spatial components ``A_r`` and ``h_rr`` present in ``field``
    contribute.

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.radial_grid import RadialGrid
        sage: from eym_exterior.weights import WeightParams
        sage: from eym_exterior.initial_data import InitialDataSpec, initial_field, initial_norm
        sage: G = RadialGrid(4, 32, 1/8); A = GaugeAlgebra('su2'); P = WeightParams()
        sage: F = initial_field(InitialDataSpec(), G, A, ('A_t', 'A_r'))
        sage: E1 = initial_norm(F, 1, P); E0 = initial_norm(F, 0, P)
        sage: 0 < E0 < E1
        True
        sage: abs(initial_norm(F.scaled(2), 1, P) / E1 - 2) < 1e-12
        True
        sage: initial_norm(F.scaled(0), 2, P)
        0.0
    """
    grid = field.grid
    r = grid.points()
    total = 0.0
    for name in ('A_r', 'h_rr'):
        if name not in field.names:
            continue
        c = field.index(name)
        parity = field.parities[c]
        f = field.phi[c]
        for k in range(int(N) + 1):
            f = deriv_r(f, grid, parity=parity)
            if parity is not None:
                parity = 'odd' if parity == 'even' else 'even'
            density = (1 + r) ** (1 + 2 * params.gamma + 2 * k) * np.sum(f * f, axis=-1)
            total += math.sqrt(integrate_exterior(density, grid, 0.0, -grid.r_max))
    return total
