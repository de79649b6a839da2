r"""
Radial grids

Theory
======

Fields are sampled on the uniform grid `r_j = j \, \Delta r`,
`j = 0, \dots, J`, of `[0, r_{\max}]`. Radial derivatives use fourth order
centered stencils in the interior. Near `r = 0` the stencils read ghost
values `f(-r) = \pm f(r)` given by the parity of the field; fields without
a parity use one-sided stencils there. At the outer edge one-sided fourth
order stencils are used. All stencil weights come from :func:`fd_weights`.

Exterior integrals are taken over the part `r - t \geq q_0` of the slice
`\{t\} \times \mathbb{R}^n`:

.. MATH::

    \int_{r \geq t + q_0} f(r) \, \mathrm{weight}(r - t) \, r^{n-1}
    |S^{n-1}| \, dr,

by the composite trapezoid rule with a fractional first cell.

EXAMPLES::

    sage: import numpy as np
    sage: from eym_exterior.radial_grid import RadialGrid, deriv_r
    sage: G = RadialGrid(4, 8, 1/8); G
    Radial grid in dimension n=4 on [0, 8.0] with dr=0.125 (65 points)
    sage: r = G.points()
    sage: bool(np.max(np.abs(deriv_r(r * r, G) - (r + r))) < 1e-12)
    True

AUTHORS:

- eym_exterior developers (2026-10-19): initial version
"""

# *****************************************************************************
#       Copyright (C) 2026 eym_exterior developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 2 of the License, or
# (at your option) any later version.
#                  http://www.gnu.org/licenses/
# *****************************************************************************

import math

import numpy as np

from sage.misc.cachefunc import cached_method
from sage.rings.real_double import RDF
from sage.structure.sage_object import SageObject
from sage.structure.unique_representation import UniqueRepresentation
from eym_exterior.exceptions import DomainExhausted
from eym_exterior.weights import weight_arrays


def fd_weights(z, x, m):
    r"""
    Return finite-difference weights on arbitrary nodes.

    INPUT:

    - ``z`` -- the evaluation point
    - ``x`` -- the nodes
    - ``m`` -- the highest derivative order

    OUTPUT:

    An array ``c`` of shape ``(m+1, len(x))`` such that
    `f^{(k)}(z) \approx \sum_j c_{kj} f(x_j)`.

    EXAMPLES::

        sage: from eym_exterior.radial_grid import fd_weights
        sage: c = fd_weights(0, [-2, -1, 0, 1, 2], 2)
        sage: c[1].tolist()  # abs tol 1e-14
        [0.08333333333333333, -0.6666666666666666, 0.0, 0.6666666666666666, -0.08333333333333333]
        sage: c[2].tolist()  # abs tol 1e-13
        [-0.08333333333333333, 1.3333333333333333, -2.5, 1.3333333333333333, -0.08333333333333333]
    """
    z = float(z)
    x = np.asarray(x, dtype=float)
    m = int(m)
    npts = len(x)
    c = np.zeros((m + 1, npts))
    c1 = 1.0
    c4 = x[0] - z
    c[0, 0] = 1.0
    for i in range(1, npts):
        mn = min(i, m)
        c2 = 1.0
        c5 = c4
        c4 = x[i] - z
        for j in range(i):
            c3 = x[i] - x[j]
            c2 = c2 * c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[k, i] = c1 * (k * c[k - 1, i - 1] - c5 * c[k, i - 1]) / c2
                c[0, i] = -c1 * c5 * c[0, i - 1] / c2
            for k in range(mn, 0, -1):
                c[k, j] = (c4 * c[k, j] - k * c[k - 1, j]) / c3
            c[0, j] = c4 * c[0, j] / c3
        c1 = c2
    return c


def sphere_area(n):
    r"""
    Return `|S^{n-1}| = 2 \pi^{n/2} / \Gamma(n/2)` for `n \geq 2`.

    For `n = 1` the exterior is a half-line and the measure is `1`.

    EXAMPLES::

        sage: from eym_exterior.radial_grid import sphere_area
        sage: sphere_area(2), sphere_area(3)  # rel tol 1e-15
        (6.283185307179586, 12.566370614359172)
        sage: sphere_area(4)  # rel tol 1e-15
        19.739208802178716
        sage: sphere_area(1)
        1.0
    """
    n = int(n)
    if n < 1:
        raise ValueError("the dimension must be positive")
    if n == 1:
        return 1.0
    half = RDF(n) / 2
    return float(2 * RDF.pi() ** half / half.gamma())


class RadialGrid(UniqueRepresentation, SageObject):
    r"""
    The uniform grid `r_j = j \Delta r` on `[0, r_{\max}]` in space
    dimension `n`.

    INPUT:

    - ``n`` -- the space dimension, at least `1`
    - ``r_max`` -- the outer radius, an integer multiple of ``dr``
    - ``dr`` -- the spacing

    EXAMPLES::

        sage: from eym_exterior.radial_grid import RadialGrid
        sage: G = RadialGrid(3, 4, 0.25)
        sage: G.J, G.points()[:3].tolist()
        (16, [0.0, 0.25, 0.5])
        sage: RadialGrid(3, 2, 0.25)
        Traceback (most recent call last):
        ...
        ValueError: the grid needs J >= 16 cells, got 8
        sage: RadialGrid(3, 4.1, 0.25)
        Traceback (most recent call last):
        ...
        ValueError: r_max must be an integer multiple of dr
    """

    @staticmethod
    def __classcall__(cls, n, r_max, dr):
        """
        Normalize arguments and set class.
        """
        return super().__classcall__(cls, int(n), float(r_max), float(dr))

    def __init__(self, n, r_max, dr):
        """
        Initialize ``self``.
        """
        self.n = n
        self.r_max = r_max
        self.dr = dr
        self.is_valid()
        self.J = int(round(r_max / dr))
        self.sphere_area = sphere_area(n)

    def is_valid(self) -> bool:
        """
        Return whether ``self`` is a valid grid, or raise a ``ValueError``.
        """
        if self.n < 1:
            raise ValueError("the dimension must be positive")
        if not (math.isfinite(self.dr) and self.dr > 0):
            raise ValueError("dr must be positive")
        if not math.isfinite(self.r_max):
            raise ValueError("r_max must be finite")
        J = round(self.r_max / self.dr)
        if abs(J * self.dr - self.r_max) > 1e-9 * max(1.0, self.r_max):
            raise ValueError("r_max must be an integer multiple of dr")
        if J < 16:
            raise ValueError("the grid needs J >= 16 cells, got %s" % J)
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Radial grid in dimension n=%s on [0, %r] with dr=%r (%s points)"
                % (self.n, self.r_max, self.dr, self.J + 1))

    @cached_method
    def points(self):
        """
        Return the grid points as a read-only numpy array.
        """
        r = self.dr * np.arange(self.J + 1)
        r.setflags(write=False)
        return r

    def refine(self):
        """
        Return the grid with half the spacing on the same interval.
        """
        return RadialGrid(self.n, self.r_max, self.dr / 2)

    def coarsen(self):
        """
        Return the grid with twice the spacing on the same interval.
        """
        return RadialGrid(self.n, self.r_max, self.dr * 2)

    def index_of(self, r):
        """
        Return the index of the grid point closest to ``r``.
        """
        return min(self.J, max(0, int(round(float(r) / self.dr))))


def _check_axis(f, grid, axis):
    f = np.moveaxis(np.asarray(f, dtype=float), axis, 0)
    if f.shape[0] != grid.J + 1:
        raise ValueError("array length %s does not match the grid (%s points)"
                         % (f.shape[0], grid.J + 1))
    return f


def _ghosts(f, parity):
    sign = {'even': 1.0, 'odd': -1.0}[parity]
    return np.concatenate([sign * f[2:0:-1], f])


def _apply(f, weights, start):
    return np.tensordot(weights, f[start:start + len(weights)], axes=(0, 0))


def _derivative(f, grid, parity, order, axis):
    if parity not in ('even', 'odd', None):
        raise ValueError("parity must be 'even', 'odd' or None")
    f = _check_axis(f, grid, axis)
    J = grid.J
    h = grid.dr
    if order == 1:
        central = np.array([1.0, -8.0, 0.0, 8.0, -1.0]) / (12 * h)
        width = 5
    else:
        central = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / (12 * h * h)
        width = 6
    out = np.empty_like(f)
    # centered stencils on j = first .. J-2
    if parity is None:
        ext, first = f, 2
        nodes = np.arange(width, dtype=float)
        for j in (0, 1):
            out[j] = _apply(f, fd_weights(j, nodes, order)[order] / h ** order, 0)
    else:
        ext, first = _ghosts(f, parity), 0
    shift = 2 if parity is not None else 0
    count = J - 1 - first
    acc = np.zeros_like(f[:count])
    for k, c in enumerate(central):
        if c:
            start = first - 2 + shift + k
            acc += c * ext[start:start + count]
    out[first:J - 1] = acc
    nodes = np.arange(width, dtype=float)
    for j in (J - 1, J):
        w = fd_weights(j - (J - width + 1), nodes, order)[order] / h ** order
        out[j] = _apply(f, w, J - width + 1)
    if parity is not None and ((parity == 'even') == (order == 1)):
        out[0] = 0.0
    return np.moveaxis(out, 0, axis)


def deriv_r(f, grid, parity='even', axis=0):
    r"""
    Return the radial derivative of ``f`` on ``grid``.

    INPUT:

    - ``f`` -- array whose axis ``axis`` runs over the grid points
    - ``grid`` -- a :class:`RadialGrid`
    - ``parity`` -- (default: ``'even'``) parity of ``f`` at `r = 0`:
      ``'even'``, ``'odd'`` or ``None`` for one-sided stencils
    - ``axis`` -- (default: ``0``) the grid axis

    The derivative of an even field is odd and its value at `r = 0` is set
    to `0`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.radial_grid import RadialGrid, deriv_r
        sage: G = RadialGrid(3, 4, 1/16)
        sage: r = G.points()
        sage: float(np.max(np.abs(deriv_r(np.ones_like(r), G))))
        0.0
        sage: def err(G):
        ....:     r = G.points()
        ....:     return float(np.max(np.abs(deriv_r(np.sin(r), G, parity='odd') - np.cos(r))))
        sage: 16 * 0.7 < err(G) / err(G.refine()) < 16 * 1.3
        True
        sage: deriv_r(np.ones(5), G)
        Traceback (most recent call last):
        ...
        ValueError: array length 5 does not match the grid (65 points)
    """
    return _derivative(f, grid, parity, 1, axis)


def deriv_r2(f, grid, parity='even', axis=0):
    r"""
    Return the second radial derivative of ``f`` on ``grid``.

    The arguments are as for :func:`deriv_r`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.radial_grid import RadialGrid, deriv_r2
        sage: G = RadialGrid(3, 4, 1/8)
        sage: r = G.points()
        sage: bool(np.max(np.abs(deriv_r2(r * r * r * r, G) - float(12) * r * r)) < 1e-9)
        True
        sage: bool(np.max(np.abs(deriv_r2(r * r * r - float(2) * r, G, parity='odd') - float(6) * r)) < 1e-9)
        True
    """
    return _derivative(f, grid, parity, 2, axis)


def integrate_exterior(density, grid, t, q0, weight=None, params=None):
    r"""
    Return the exterior integral of ``density`` at time ``t``.

    INPUT:

    - ``density`` -- array over the grid points
    - ``grid`` -- a :class:`RadialGrid`
    - ``t`` -- the time, at least `0`
    - ``q0`` -- the cutoff of the exterior region `r - t \geq q_0`
    - ``weight`` -- (default: ``None``) the weight: ``None`` for `1`, an
      array over the grid, or a key of
      :func:`~eym_exterior.weights.weight_arrays` such as ``'w'`` or
      ``'w_hat_prime'``, evaluated at `\max(r - t, q_0)` with ``params``
      so that the cell cut by the cone sees the weight of the cone
    - ``params`` -- (default: ``None``) a
      :class:`~eym_exterior.weights.WeightParams`, needed for keys

    A ``DomainExhausted`` error is raised when `t + q_0 \geq r_{\max} - 4
    \Delta r`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.radial_grid import RadialGrid, integrate_exterior
        sage: G = RadialGrid(1, 16, 1/4)
        sage: integrate_exterior(np.ones(G.J + 1), G, 0, 0)
        16.0
        sage: G = RadialGrid(4, 16, 1/16)
        sage: exact = 2 * float(pi) ** 2 * 16 ** 4 / 4
        sage: abs(integrate_exterior(np.ones(G.J + 1), G, 0, 0) / exact - 1) < 1e-4
        True
        sage: inside = np.where(G.points() < 3, 1.0, 0.0)
        sage: integrate_exterior(inside, G, 2, 2)
        0.0
        sage: from eym_exterior.exceptions import DomainExhausted
        sage: try:
        ....:     integrate_exterior(np.ones(G.J + 1), G, 15.8, 0)
        ....: except DomainExhausted as err:
        ....:     print(err.time)
        15.8
    """
    t = float(t)
    q0 = float(q0)
    f = _check_axis(density, grid, 0)
    r0 = t + q0
    if r0 >= grid.r_max - 4 * grid.dr:
        raise DomainExhausted("the exterior region r >= %r leaves the grid" % r0, time=t)
    r = grid.points()
    if weight is not None:
        if isinstance(weight, str):
            if params is None:
                raise ValueError("weight parameters are needed for the weight %r" % weight)
            weight = weight_arrays(np.maximum(r - t, q0), params)[weight]
        f = f * np.asarray(weight, dtype=float)
    f = f * r ** (grid.n - 1) if grid.n > 1 else f
    h = grid.dr
    if r0 <= 0:
        total = h * (np.sum(f) - 0.5 * (f[0] + f[-1]))
    else:
        j0 = int(math.ceil(r0 / h - 1e-12))
        tail = f[j0:]
        total = h * (np.sum(tail) - 0.5 * (tail[0] + tail[-1]))
        if j0 > 0:
            theta = (r[j0] - r0) / h
            f_cut = f[j0] + theta * (f[j0 - 1] - f[j0])
            total += (r[j0] - r0) * 0.5 * (f_cut + f[j0])
    return float(grid.sphere_area * total)
