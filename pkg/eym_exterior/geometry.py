r"""
Metric perturbations

Theory
======

In wave coordinates the metric is written `g = m + h`, with `m` the
Minkowski metric `\mathrm{diag}(-1, 1, \dots, 1)` on `\mathbb{R}^{1+n}`.
The perturbation of the inverse metric is

.. MATH::

    H^{\mu\nu} = g^{\mu\nu} - m^{\mu\nu},

so that `H^{\mu\nu} = -h^{\mu\nu} + O(h^2)` with indices of `h` raised by
`m`. The energy estimates assume the smallness condition

.. MATH::

    \sum_{\mu,\nu} |H_{\mu\nu}| < \frac{1}{n}.

Since `m` is diagonal with entries `\pm 1`, the sums over `H_{\mu\nu}` and
`H^{\mu\nu}` agree; both are reported.

Two representations are provided. A :class:`MetricPoint` holds the full
`(n+1) \times (n+1)` matrices at one point and is used by the pointwise
stress algebra. A :class:`RayMetric` holds the `(t, r)` block along a ray
on a whole radial grid, with the angular block equal to the identity; it is
what the solver evolves against.

EXAMPLES::

    sage: import numpy as np
    sage: from eym_exterior.geometry import build_metric, smallness_check
    sage: pt = build_metric(np.zeros((5, 5)))
    sage: pt
    Metric point in dimension n=4 with sum |H| = 0.0
    sage: smallness_check(pt)
    (0.0, True)

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

import numpy as np

from sage.structure.sage_object import SageObject
from eym_exterior.exceptions import MetricDegenerate


def minkowski(n):
    r"""
    Return `m = \mathrm{diag}(-1, 1, \dots, 1)` of size `n + 1`.

    EXAMPLES::

        sage: from eym_exterior.geometry import minkowski
        sage: minkowski(2).tolist()
        [[-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    """
    m = np.eye(n + 1)
    m[0, 0] = -1.0
    return m


def raise_h(h_lower):
    r"""
    Return `h^{\mu\nu} = m^{\mu\alpha} m^{\nu\beta} h_{\alpha\beta}`.

    The same map lowers indices, since `m` is its own inverse.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import raise_h
        sage: raise_h(np.array([[1., 2.], [2., 3.]])).tolist()
        [[1.0, -2.0], [-2.0, 3.0]]
    """
    h = np.asarray(h_lower, dtype=float)
    s = np.ones(h.shape[-1])
    s[0] = -1.0
    return h * s[:, None] * s[None, :]


class MetricPoint(SageObject):
    r"""
    The metric and its perturbation at one point.

    Use :func:`build_metric` to construct it from `h_{\mu\nu}`, or
    :meth:`from_H` to construct it from `H^{\mu\nu}`.

    Attributes are numpy arrays: ``h_lower``, ``g_lower``, ``g_upper``,
    ``H_upper`` of shape ``(n+1, n+1)`` and ``dH`` of shape
    ``(n+1, n+1, n+1)`` with ``dH[lam, mu, nu]`` `= \partial_\lambda
    H^{\mu\nu}`.
    """
    def __init__(self, h_lower, g_lower, g_upper, dH=None):
        """
        Initialize ``self``.
        """
        self.n = h_lower.shape[0] - 1
        self.h_lower = h_lower
        self.g_lower = g_lower
        self.g_upper = g_upper
        self.H_upper = g_upper - minkowski(self.n)
        if dH is None:
            dH = np.zeros((self.n + 1,) * 3)
        else:
            dH = np.asarray(dH, dtype=float)
            if dH.shape != (self.n + 1,) * 3:
                raise ValueError("dH must have shape %s" % ((self.n + 1,) * 3,))
        self.dH = dH

    @classmethod
    def from_H(cls, H_upper, dH=None):
        r"""
        Return the point with inverse-metric perturbation ``H_upper``.

        EXAMPLES::

            sage: import numpy as np
            sage: from eym_exterior.geometry import MetricPoint
            sage: H = np.zeros((3, 3)); H[0, 0] = -0.1
            sage: pt = MetricPoint.from_H(H)
            sage: float(pt.g_upper[0, 0]), float(pt.g_lower[0, 0])  # abs tol 1e-15
            (-1.1, -0.9090909090909091)
        """
        H = np.asarray(H_upper, dtype=float)
        if not np.array_equal(H, H.T):
            raise ValueError("H must be symmetric")
        n = H.shape[0] - 1
        g_upper = minkowski(n) + H
        g_lower = _invert(g_upper)
        return cls(g_lower - minkowski(n), g_lower, g_upper, dH=dH)

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Metric point in dimension n=%s with sum |H| = %r"
                % (self.n, float(np.sum(np.abs(self.H_upper)))))

    def H_lower(self):
        r"""
        Return `H_{\mu\nu} = m_{\mu\alpha} m_{\nu\beta} H^{\alpha\beta}`.
        """
        return raise_h(self.H_upper)

    def h_upper(self):
        r"""
        Return `h^{\mu\nu}`, the perturbation with indices raised by `m`.
        """
        return raise_h(self.h_lower)


def _invert(g):
    try:
        g_inv = np.linalg.inv(g)
    except np.linalg.LinAlgError:
        raise MetricDegenerate("metric degenerate: g is singular")
    if not np.all(np.isfinite(g_inv)):
        raise MetricDegenerate("metric degenerate: g is singular")
    return g_inv


def build_metric(h_lower, dH=None):
    r"""
    Assemble `g = m + h`, its inverse and `H = g^{-1} - m^{-1}`.

    INPUT:

    - ``h_lower`` -- symmetric `(n+1) \times (n+1)` array `h_{\mu\nu}`
    - ``dH`` -- (default: zero) derivatives `\partial_\lambda H^{\mu\nu}`

    OUTPUT: a :class:`MetricPoint`

    A ``MetricDegenerate`` error is raised when `g` is singular or when
    `g^{tt} \geq -0.1`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import build_metric
        sage: h = np.zeros((2, 2)); h[0, 0] = 0.1
        sage: pt = build_metric(h)
        sage: float(pt.g_lower[0, 0]), float(pt.H_upper[0, 0])  # abs tol 1e-15
        (-0.9, -0.1111111111111111)
        sage: h = np.zeros((2, 2)); h[0, 1] = h[1, 0] = 0.1
        sage: float(build_metric(h).H_upper[0, 1])  # abs tol 1e-15
        0.09900990099009901
        sage: a = np.random.default_rng(int(1)).uniform(-0.025, 0.025, (4, 4))
        sage: pt = build_metric(a + a.T)
        sage: bool(np.max(np.abs(pt.g_upper @ pt.g_lower - np.eye(4))) <= 1e-12)
        True

    Perturbations that spoil the Lorentzian signature are rejected::

        sage: from eym_exterior.exceptions import MetricDegenerate
        sage: h = np.zeros((2, 2)); h[0, 0] = 1.0
        sage: try:
        ....:     build_metric(h)
        ....: except MetricDegenerate as err:
        ....:     print(err)
        metric degenerate: g is singular
        sage: build_metric(np.array([[0., 0.1], [0., 0.]]))
        Traceback (most recent call last):
        ...
        ValueError: h must be symmetric
    """
    h = np.asarray(h_lower, dtype=float)
    if h.ndim != 2 or h.shape[0] != h.shape[1] or h.shape[0] < 2:
        raise ValueError("h must be a square matrix of size at least 2")
    if not np.all(np.isfinite(h)):
        raise ValueError("h must be finite")
    if not np.array_equal(h, h.T):
        raise ValueError("h must be symmetric")
    n = h.shape[0] - 1
    g_lower = minkowski(n) + h
    g_upper = _invert(g_lower)
    if not g_upper[0, 0] < -0.1:
        raise MetricDegenerate("metric degenerate: g^tt = %r" % float(g_upper[0, 0]))
    return MetricPoint(h, g_lower, g_upper, dH=dH)


def smallness_sums(pt):
    r"""
    Return `(\sum |H_{\mu\nu}|, \sum |H^{\mu\nu}|)` at ``pt``.
    """
    return (float(np.sum(np.abs(pt.H_lower()))),
            float(np.sum(np.abs(pt.H_upper))))


def smallness_check(pt, n=None):
    r"""
    Test the smallness condition `\sum_{\mu\nu} |H_{\mu\nu}| < 1/n`.

    INPUT:

    - ``pt`` -- a :class:`MetricPoint`
    - ``n`` -- (default: the dimension of ``pt``) the space dimension

    OUTPUT: the pair ``(sum, ok)``

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import MetricPoint, smallness_check
        sage: H = np.zeros((5, 5)); H[0, 0] = 0.3
        sage: smallness_check(MetricPoint.from_H(H))
        (0.3, False)
        sage: H[0, 0] = -0.2
        sage: smallness_check(MetricPoint.from_H(H))
        (0.2, True)
    """
    if n is None:
        n = pt.n
    lowered, raised = smallness_sums(pt)
    return (lowered, bool(lowered < 1.0 / n and raised < 1.0 / n))


def first_order_consistency(h_direction, scales=None):
    r"""
    Fit the order of `H + h^{\cdot\cdot}` as `h \to 0`.

    For each scale `s` the metric is built from `s \cdot h` and the error
    `\max |H^{\mu\nu} + h^{\mu\nu}|` is recorded. The slope of
    `\log` error against `\log s` is returned with the errors; it is
    `2` since `H = -h + O(h^2)`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import first_order_consistency
        sage: a = np.random.default_rng(int(7)).uniform(-1, 1, (5, 5))
        sage: R = first_order_consistency(a + a.T)
        sage: abs(R['slope'] - 2) < 0.05
        True
    """
    h = np.asarray(h_direction, dtype=float)
    if scales is None:
        scales = np.geomspace(1e-2, 1e-4, 5)
    scales = np.asarray(scales, dtype=float)
    errors = []
    for s in scales:
        pt = build_metric(s * h)
        errors.append(float(np.max(np.abs(pt.H_upper + pt.h_upper()))))
    slope = np.polyfit(np.log(scales), np.log(errors), 1)[0]
    return {'slope': float(slope), 'scales': scales.tolist(), 'errors': errors}


class RayMetric(SageObject):
    r"""
    The `(t, r)` block of the inverse-metric perturbation along a ray.

    INPUT:

    - ``H`` -- array of shape ``(3, J+1)`` holding `H^{tt}, H^{tr}, H^{rr}`
    - ``dH_t``, ``dH_r`` -- arrays of the same shape holding their `t` and
      `r` derivatives

    The angular block of `g` is the identity.

    EXAMPLES::

        sage: from eym_exterior.geometry import RayMetric
        sage: g = RayMetric.flat(5); g
        Ray metric on 5 points with max sum |H| = 0.0
        sage: g.gtt.tolist()
        [-1.0, -1.0, -1.0, -1.0, -1.0]
    """
    def __init__(self, H, dH_t, dH_r):
        """
        Initialize ``self``.
        """
        self.H = np.asarray(H, dtype=float)
        self.dH_t = np.asarray(dH_t, dtype=float)
        self.dH_r = np.asarray(dH_r, dtype=float)
        if self.H.shape[0] != 3 or self.dH_t.shape != self.H.shape \
                or self.dH_r.shape != self.H.shape:
            raise ValueError("ray metric arrays must have shape (3, J+1)")
        self.gtt = self.H[0] - 1.0
        self.gtr = self.H[1]
        self.grr = self.H[2] + 1.0

    @classmethod
    def flat(cls, size):
        """
        Return the Minkowski metric on ``size`` points.
        """
        z = np.zeros((3, size))
        return cls(z, z.copy(), z.copy())

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Ray metric on %s points with max sum |H| = %r"
                % (self.H.shape[1], float(np.max(self.smallness()))))

    def smallness(self):
        r"""
        Return `|H^{tt}| + 2|H^{tr}| + |H^{rr}|` at every point.
        """
        return np.abs(self.H[0]) + 2 * np.abs(self.H[1]) + np.abs(self.H[2])

    def H_full(self, n):
        r"""
        Return `H^{\mu\nu}` as arrays of shape ``(J+1, n+1, n+1)`` on the ray
        `x = r e_1`.
        """
        return ray_tensor_full(self.H, n)


def ray_tensor_full(components, n):
    r"""
    Return the `(n+1) \times (n+1)` arrays on the ray `x = r e_1` of a
    symmetric tensor given by its components ``(tt, tr, rr)``, each an
    array over the grid; the angular entries vanish.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import ray_tensor_full
        sage: ray_tensor_full(np.array([[1.], [2.], [3.]]), 2)[0].tolist()
        [[1.0, 2.0, 0.0], [2.0, 3.0, 0.0], [0.0, 0.0, 0.0]]
    """
    components = np.asarray(components, dtype=float)
    out = np.zeros((components.shape[1], n + 1, n + 1))
    out[:, 0, 0] = components[0]
    out[:, 0, 1] = out[:, 1, 0] = components[1]
    out[:, 1, 1] = components[2]
    return out


def ray_metric_from_h(h, h_t, h_r):
    r"""
    Return the :class:`RayMetric` of a perturbation `h_{tt}, h_{tr},
    h_{rr}` given on a grid.

    INPUT:

    - ``h``, ``h_t``, ``h_r`` -- arrays of shape ``(3, J+1)`` holding the
      lowered components and their `t` and `r` derivatives

    The derivatives of `H` use `\partial g^{-1} = -g^{-1} (\partial g)
    g^{-1}`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import build_metric, ray_metric_from_h
        sage: h = np.array([[0.1], [0.05], [-0.02]])
        sage: g = ray_metric_from_h(h, 0 * h, 0 * h)
        sage: M = np.array([[0.1, 0.05], [0.05, -0.02]])
        sage: H = build_metric(M).H_upper
        sage: [float(g.H[k, 0] - H[i, j]) for k, (i, j) in enumerate([(0, 0), (0, 1), (1, 1)])]  # abs tol 1e-15
        [0.0, 0.0, 0.0]
    """
    h = np.asarray(h, dtype=float)
    a = h[0] - 1.0
    b = h[1]
    c = h[2] + 1.0
    det = a * c - b * b
    if np.any(np.abs(det) < 1e-12) or not np.all(np.isfinite(det)):
        raise MetricDegenerate("metric degenerate: g is singular")
    G = np.array([[c, -b], [-b, a]]) / det
    H = np.array([G[0, 0] + 1.0, G[0, 1], G[1, 1] - 1.0])

    def d_inverse(dh):
        dh = np.asarray(dh, dtype=float)
        dg = np.array([[dh[0], dh[1]], [dh[1], dh[2]]])
        dG = -np.einsum('ikj,klj,lmj->imj', G, dg, G)
        return np.array([dG[0, 0], dG[0, 1], dG[1, 1]])

    return RayMetric(H, d_inverse(h_t), d_inverse(h_r))


def prescribed_ray_metric(r, t, eps, C, gamma, n):
    r"""
    Return the analytic decaying background

    .. MATH::

        p(t, q) = \frac{C \varepsilon}{(1+t+|q|)^{(n-1)/2} (1+|q|)^{1+\gamma}},
        \qquad H^{tt} = -p, \quad H^{tr} = p/2, \quad H^{rr} = p,

    with `q = r - t`, together with its exact derivatives.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import prescribed_ray_metric
        sage: r = np.linspace(0, 10, 101)
        sage: g = prescribed_ray_metric(r, 2.0, 1e-3, 1.0, 0.5, 4)
        sage: float(g.H[2, 20])  # abs tol 1e-18
        0.000125
        sage: p = lambda t: prescribed_ray_metric(r, t, 1e-3, 1.0, 0.5, 4).H[2]
        sage: fd = (p(2.0 + 1e-6) - p(2.0 - 1e-6)) / 2e-6
        sage: bool(np.max(np.abs(fd - g.dH_t[2])[r >= float(3)]) < 1e-9)
        True
    """
    r = np.asarray(r, dtype=float)
    t, eps, C, gamma, n = float(t), float(eps), float(C), float(gamma), int(n)
    q = r - t
    aq = np.abs(q)
    sgn = np.sign(q)
    s = 1 + t + aq
    u = 1 + aq
    p = C * eps * s ** (-(n - 1) / 2) * u ** (-1 - gamma)
    k = (n - 1) / 2
    p_t = p * (-k * (1 - sgn) / s + (1 + gamma) * sgn / u)
    p_r = p * (-k * sgn / s - (1 + gamma) * sgn / u)
    H = np.array([-p, p / 2, p])
    dH_t = np.array([-p_t, p_t / 2, p_t])
    dH_r = np.array([-p_r, p_r / 2, p_r])
    return RayMetric(H, dH_t, dH_r)
