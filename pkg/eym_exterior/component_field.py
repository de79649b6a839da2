r"""
Component fields

A :class:`ComponentField` is the state of the radial system at one time:
each named component `\Phi_V` (for instance ``A_t`` or ``h_tr``) is a
`\mathfrak{g}`-valued radial function sampled on a
:class:`~eym_exterior.radial_grid.RadialGrid`, stored together with its
time derivative `\Pi_V = \partial_t \Phi_V`.

Arrays have shape ``(C, J+1, dim)`` where ``C`` is the number of
components and ``dim`` the dimension of the gauge algebra. Scalar
components (the metric perturbation) use basis slot ``0`` only.

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

import numpy as np

from sage.structure.sage_object import SageObject
from eym_exterior.radial_grid import deriv_r


class ComponentField(SageObject):
    r"""
    A named family of radial `\mathfrak{g}`-valued fields at one time.

    INPUT:

    - ``grid`` -- a :class:`~eym_exterior.radial_grid.RadialGrid`
    - ``algebra`` -- the gauge algebra of the values
    - ``names`` -- tuple of component names
    - ``phi``, ``pi`` -- arrays of shape ``(C, J+1, dim)``: the components
      and their time derivatives
    - ``t`` -- (default: ``0.0``) the time
    - ``parities`` -- (default: all ``'even'``) parity at `r = 0` of each
      component: ``'even'``, ``'odd'`` or ``None``
    - ``time_jet`` -- (default: ``None``) array of shape
      ``(K+1, C, J+1, dim)`` of the time derivatives
      `\partial_t^k \Phi` for `k \leq K`
    - ``phi_r`` -- (default: ``None``) precomputed radial derivatives of
      ``phi``; they are computed from ``parities`` when missing
    - ``pi_r`` -- (default: ``None``) precomputed radial derivatives of
      ``pi``

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.radial_grid import RadialGrid
        sage: from eym_exterior.component_field import ComponentField
        sage: G = RadialGrid(4, 4, 1/4)
        sage: F = ComponentField.zero(G, GaugeAlgebra('su2'), ('A_t', 'A_r')); F
        Component field (A_t, A_r) on 17 points at t=0.0
        sage: F.phi.shape
        (2, 17, 3)
        sage: F.index('A_r')
        1
        sage: F.index('h_tt')
        Traceback (most recent call last):
        ...
        ValueError: unknown component 'h_tt'
    """
    def __init__(self, grid, algebra, names, phi, pi, t=0.0, parities=None,
                 time_jet=None, phi_r=None, pi_r=None):
        """
        Initialize ``self``.
        """
        self.grid = grid
        self.algebra = algebra
        self.names = tuple(names)
        self.phi = np.asarray(phi, dtype=float)
        self.pi = np.asarray(pi, dtype=float)
        self.t = float(t)
        if parities is None:
            parities = ('even',) * len(self.names)
        self.parities = tuple(parities)
        self.time_jet = time_jet
        self._phi_r = phi_r
        self._pi_r = pi_r
        self.is_valid()

    @classmethod
    def zero(cls, grid, algebra, names, t=0.0):
        """
        Return the vanishing field with components ``names``.
        """
        shape = (len(names), grid.J + 1, algebra.dimension())
        return cls(grid, algebra, names, np.zeros(shape), np.zeros(shape), t=t)

    def is_valid(self) -> bool:
        """
        Return whether the arrays are consistent and finite, or raise a
        ``ValueError``.
        """
        shape = (len(self.names), self.grid.J + 1, self.algebra.dimension())
        if self.phi.shape != shape or self.pi.shape != shape:
            raise ValueError("field arrays must have shape %s" % (shape,))
        if len(self.parities) != len(self.names):
            raise ValueError("one parity per component is needed")
        if not (np.all(np.isfinite(self.phi)) and np.all(np.isfinite(self.pi))):
            raise ValueError("field entries must be finite")
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Component field (%s) on %s points at t=%r"
                % (", ".join(self.names), self.grid.J + 1, self.t))

    def index(self, name):
        """
        Return the position of the component ``name``.
        """
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError("unknown component %r" % (name,))

    def component(self, name):
        """
        Return the pair ``(phi, pi)`` of arrays of shape ``(J+1, dim)`` of
        the component ``name``.
        """
        c = self.index(name)
        return self.phi[c], self.pi[c]

    def _radial(self, arrays):
        return np.array([deriv_r(a, self.grid, parity=p)
                         for a, p in zip(arrays, self.parities)])

    def phi_r(self):
        r"""
        Return `\partial_r \Phi` for all components.

        EXAMPLES::

            sage: import numpy as np
            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: from eym_exterior.radial_grid import RadialGrid
            sage: from eym_exterior.component_field import ComponentField
            sage: G = RadialGrid(2, 4, 1/4)
            sage: r = G.points()
            sage: phi = (r * r)[None, :, None]
            sage: F = ComponentField(G, GaugeAlgebra('abelian'), ('u',), phi, 0 * phi)
            sage: bool(np.max(np.abs(F.phi_r()[0, :, 0] - (r + r))) < 1e-12)
            True
        """
        if self._phi_r is None:
            self._phi_r = self._radial(self.phi)
        return self._phi_r

    def pi_r(self):
        r"""
        Return `\partial_r \Pi` for all components.
        """
        if self._pi_r is None:
            self._pi_r = self._radial(self.pi)
        return self._pi_r

    def scaled(self, c):
        """
        Return the field with every array multiplied by ``c``.
        """
        c = float(c)
        jet = None if self.time_jet is None else c * self.time_jet
        return ComponentField(self.grid, self.algebra, self.names, c * self.phi,
                              c * self.pi, t=self.t, parities=self.parities,
                              time_jet=jet)

    def with_data(self, phi, pi, t):
        """
        Return a field with the same layout and new data.
        """
        return ComponentField(self.grid, self.algebra, self.names, phi, pi,
                              t=t, parities=self.parities)

    def to_csv(self, out):
        r"""
        Write the components to ``out`` as CSV with columns ``r``,
        ``component``, ``basis``, ``value``.

        The time is stored in a leading comment line. ``out`` is a path or
        a text file object.

        EXAMPLES::

            sage: import io
            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: from eym_exterior.radial_grid import RadialGrid
            sage: from eym_exterior.component_field import ComponentField
            sage: F = ComponentField.zero(RadialGrid(4, 4, 1/4), GaugeAlgebra('abelian'), ('A_t',), t=2)
            sage: buf = io.StringIO()
            sage: F.to_csv(buf)
            sage: print("".join(buf.getvalue().splitlines(True)[:4]), end="")
            # t=2
            r,component,basis,value
            0,A_t,0,0
            0.25,A_t,0,0
        """
        if isinstance(out, str):
            with open(out, 'w', newline='', encoding='utf-8') as handle:
                return self.to_csv(handle)
        out.write("# t=%.17g\n" % self.t)
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(['r', 'component', 'basis', 'value'])
        r = self.grid.points()
        for c, name in enumerate(self.names):
            for j in range(self.grid.J + 1):
                for k in range(self.phi.shape[2]):
                    writer.writerow(['%.17g' % r[j], name, k, '%.17g' % self.phi[c, j, k]])
