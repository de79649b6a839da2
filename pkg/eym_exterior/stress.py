r"""
Stress tensor algebra

Theory
======

For a family of `\mathfrak{g}`-valued unknowns `\Phi` the (non-symmetric)
stress tensor of the wave operator `g^{\alpha\beta}\partial_\alpha
\partial_\beta` is

.. MATH::

    T^\mu{}_\nu = g^{\mu\alpha} \langle \partial_\alpha \Phi,
    \partial_\nu \Phi \rangle - \frac{1}{2} \delta^\mu_\nu
    g^{\alpha\beta} \langle \partial_\alpha \Phi, \partial_\beta \Phi
    \rangle,

with `g^{\mu\nu} = m^{\mu\nu} + H^{\mu\nu}`. Writing
`P_{ab} = \langle \partial_a \Phi, \partial_b \Phi \rangle`, the cross terms
`g^{tj}` cancel in `T_{tt} = -T^t{}_t` and

.. MATH::

    T_{tt} = -\frac{1}{2} g^{tt} P_{tt} + \frac{1}{2} g^{ij} P_{ij}.

Along the radial direction `\omega = x/r`,

.. MATH::

    T_{rt} = \omega_j g^{j\alpha} P_{\alpha t}, \qquad
    T_{tt} + T_{rt} = \frac{1}{2}\Big( |\partial_t\Phi + \partial_r\Phi|^2
    + \sum_j |\partial_j\Phi - \omega_j \partial_r\Phi|^2 \Big)
    + H\text{-terms},

and the `H`-terms are

.. MATH::

    -\frac{1}{2} H^{tt} P_{tt} + \frac{1}{2} H^{ij} P_{ij}
    + \omega_j H^{jt} P_{tt} + \omega_i H^{ij} P_{jt}.

The first group only involves tangential derivatives to the outgoing cones
and is nonnegative; this split is what gives the space-time integral of
tangential derivatives its good sign.

The `t`-divergence is

.. MATH::

    \partial_\mu T^\mu{}_t = \langle g^{\mu\alpha}\partial_\mu\partial_\alpha
    \Phi, \partial_t\Phi \rangle
    + \frac{1}{2} (\partial_t H^{t\alpha}) P_{\alpha t}
    + (\partial_j H^{j\alpha}) P_{\alpha t}
    - \frac{1}{2} (\partial_t H^{j\beta}) P_{j\beta}.

Every operation has a pointwise form working on :class:`Jet1` or
:class:`Jet2` and a ``*_array`` kernel working on arrays with arbitrary
leading axes; the pointwise forms call the kernels.

EXAMPLES::

    sage: import numpy as np
    sage: from eym_exterior.gauge_algebra import GaugeAlgebra
    sage: from eym_exterior.geometry import build_metric
    sage: from eym_exterior.stress import Jet1, stress_Ttt, stress_Trt, tangential_split
    sage: e1, e2, e3 = GaugeAlgebra('su2').basis()
    sage: z = e1 * 0
    sage: flat = build_metric(np.zeros((5, 5)))
    sage: stress_Ttt(Jet1([e1, z, z, z, z]), flat)
    0.5
    sage: outgoing = Jet1([e1, -e1, z, z, z], x=[2, 0, 0, 0])
    sage: tangential_split(outgoing, flat)
    (0.0, 0.0)
    sage: stress_Trt(Jet1([e1, e1, z, z, z], x=[1, 0, 0, 0]), flat)
    1.0

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

from sage.misc.verbose import verbose
from sage.structure.sage_object import SageObject
from eym_exterior.lie_value import LieValue
from eym_exterior.geometry import minkowski, ray_tensor_full


def _as_array(values):
    if len(values) and isinstance(values[0], LieValue):
        return np.array([v.to_array() for v in values])
    return np.asarray(values, dtype=float)


class Jet1(SageObject):
    r"""
    First derivatives `\partial_\mu \Phi` at a point.

    INPUT:

    - ``d`` -- list of `n + 1` :class:`LieValue` (or an array of shape
      ``(n+1, dim)``), the derivatives along `t, x^1, \dots, x^n`
    - ``x`` -- (default: ``None``) the spatial position; it fixes the radial
      direction `\omega = x/|x|` and is needed for the radial operations

    EXAMPLES::

        sage: from eym_exterior.stress import Jet1
        sage: J = Jet1([[1, 0], [0, 0], [0, 0]], x=[0, 3]); J
        First-order jet in dimension n=2 at r=3.0
        sage: J.omega.tolist()
        [0.0, 1.0]
        sage: Jet1([[1, 0], [float('nan'), 0], [0, 0]])
        Traceback (most recent call last):
        ...
        ValueError: jet entries must be finite
    """
    def __init__(self, d, x=None):
        """
        Initialize ``self``.
        """
        self.d = _as_array(list(d))
        if self.d.ndim != 2 or self.d.shape[0] < 2:
            raise ValueError("a jet needs n+1 >= 2 derivatives")
        if not np.all(np.isfinite(self.d)):
            raise ValueError("jet entries must be finite")
        self.n = self.d.shape[0] - 1
        self.x = None
        self.r = None
        self.omega = None
        if x is not None:
            x = np.asarray(x, dtype=float)
            if x.shape != (self.n,):
                raise ValueError("the position must have %s coordinates" % self.n)
            self.x = x
            self.r = float(np.linalg.norm(x))
            if self.r > 0:
                self.omega = x / self.r

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        where = "" if self.r is None else " at r=%r" % self.r
        return "First-order jet in dimension n=%s%s" % (self.n, where)

    def _omega(self):
        if self.omega is None:
            raise ValueError("the radial direction is undefined at r = 0")
        return self.omega


class Jet2(Jet1):
    r"""
    First and second derivatives of `\Phi` at a point.

    INPUT:

    - ``d`` -- as for :class:`Jet1`
    - ``dd`` -- array of shape ``(n+1, n+1, dim)`` (or nested lists of
      :class:`LieValue`); only the entries with `\mu \leq \nu` are read and
      mirrored, so the stored second derivatives are symmetric
    - ``x`` -- (default: ``None``) the spatial position

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.stress import Jet2
        sage: dd = np.zeros((3, 3, 1)); dd[0, 1] = 1.0
        sage: J = Jet2(np.zeros((3, 1)), dd)
        sage: float(J.dd[1, 0, 0])
        1.0
    """
    def __init__(self, d, dd, x=None):
        """
        Initialize ``self``.
        """
        Jet1.__init__(self, d, x=x)
        if len(dd) and len(dd[0]) and isinstance(dd[0][0], LieValue):
            dd = np.array([[v.to_array() for v in row] for row in dd])
        dd = np.asarray(dd, dtype=float)
        if dd.shape != (self.n + 1, self.n + 1, self.d.shape[1]):
            raise ValueError("second derivatives must have shape %s"
                             % ((self.n + 1, self.n + 1, self.d.shape[1]),))
        if not np.all(np.isfinite(dd)):
            raise ValueError("jet entries must be finite")
        upper = np.triu(np.ones((self.n + 1, self.n + 1), dtype=bool))
        self.dd = np.where(upper[:, :, None], dd, dd.transpose(1, 0, 2))

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return "Second-order jet" + Jet1._repr_(self)[len("First-order jet"):]


# Array kernels. Leading axes are batch axes; ``d`` has shape
# (..., n+1, dim), ``G`` and ``H`` (..., n+1, n+1), ``omega`` (..., n),
# ``dd`` (..., n+1, n+1, dim) and ``dH`` (..., n+1, n+1, n+1) with
# dH[..., lam, mu, nu] the derivative of H^{mu nu} along lam.

def gram_array(d):
    r"""
    Return `P_{ab} = \langle \partial_a \Phi, \partial_b \Phi \rangle`.
    """
    return np.einsum('...ak,...bk->...ab', d, d)


def stress_mixed_array(d, G):
    r"""
    Return `T^\mu{}_\nu = G^{\mu\alpha} P_{\alpha\nu} - \frac{1}{2}
    \delta^\mu_\nu G^{\alpha\beta} P_{\alpha\beta}`.
    """
    P = gram_array(d)
    tr = np.einsum('...ab,...ab->...', G, P)
    eye = np.eye(d.shape[-2])
    return np.einsum('...ma,...an->...mn', G, P) - 0.5 * tr[..., None, None] * eye


def stress_Ttt_array(d, G):
    r"""
    Return `T_{tt} = -\frac{1}{2} G^{tt} P_{tt} + \frac{1}{2} G^{ij} P_{ij}`.
    """
    P = gram_array(d)
    return (-0.5 * G[..., 0, 0] * P[..., 0, 0]
            + 0.5 * np.einsum('...ij,...ij->...', G[..., 1:, 1:], P[..., 1:, 1:]))


def stress_Trt_array(d, G, omega):
    r"""
    Return `T_{rt} = \omega_j G^{j\alpha} P_{\alpha t}`.
    """
    P = gram_array(d)
    return np.einsum('...j,...ja,...a->...', omega, G[..., 1:, :], P[..., :, 0])


def tangential_split_array(d, H, omega):
    r"""
    Return the arrays ``(good_sq, H_correction)`` of the tangential split.
    """
    dt = d[..., 0, :]
    dx = d[..., 1:, :]
    dr = np.einsum('...j,...jk->...k', omega, dx)
    ang = dx - omega[..., :, None] * dr[..., None, :]
    good = 0.5 * (np.sum((dt + dr) ** 2, axis=-1) + np.sum(ang ** 2, axis=(-2, -1)))
    P = gram_array(d)
    corr = (-0.5 * H[..., 0, 0] * P[..., 0, 0]
            + 0.5 * np.einsum('...ij,...ij->...', H[..., 1:, 1:], P[..., 1:, 1:])
            + np.einsum('...j,...j->...', omega, H[..., 1:, 0]) * P[..., 0, 0]
            + np.einsum('...i,...ij,...j->...', omega, H[..., 1:, 1:], P[..., 1:, 0]))
    return good, corr


def divergence_Tt_array(d, dd, G, dH):
    r"""
    Return `\partial_\mu T^\mu{}_t`.
    """
    P = gram_array(d)
    box = np.einsum('...ma,...mak->...k', G, dd)
    principal = np.einsum('...k,...k->...', box, d[..., 0, :])
    t1 = 0.5 * np.einsum('...a,...a->...', dH[..., 0, 0, :], P[..., :, 0])
    t2 = np.einsum('...jja,...a->...', dH[..., 1:, 1:, :], P[..., :, 0])
    t3 = -0.5 * np.einsum('...jb,...jb->...', dH[..., 0, 1:, :], P[..., 1:, :])
    return principal + t1 + t2 + t3


def energy_density_array(d, G):
    r"""
    Return `-\frac{1}{2} g^{tt} |\partial_t \Phi|^2 + \frac{1}{2} g^{ij}
    \langle \partial_j \Phi, \partial_i \Phi \rangle`.
    """
    return stress_Ttt_array(d, G)


def stress_mixed(jet, pt):
    r"""
    Return the full contraction `T^\mu{}_\nu` as an `(n+1) \times (n+1)`
    array.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import build_metric
        sage: from eym_exterior.stress import Jet1, stress_mixed, stress_Ttt
        sage: jet = Jet1(np.random.default_rng(int(3)).standard_normal((4, 3)))
        sage: a = np.random.default_rng(int(4)).uniform(-0.02, 0.02, (4, 4))
        sage: pt = build_metric(a + a.T)
        sage: abs(stress_Ttt(jet, pt) + float(stress_mixed(jet, pt)[0, 0])) < 1e-13
        True
    """
    return stress_mixed_array(jet.d, pt.g_upper)


def stress_Ttt(jet, pt):
    r"""
    Return `T_{tt}` at ``jet``.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import build_metric
        sage: from eym_exterior.stress import Jet1, stress_Ttt
        sage: flat = build_metric(np.zeros((3, 3)))
        sage: stress_Ttt(Jet1([[0], [1], [0]]), flat)
        0.5
        sage: stress_Ttt(Jet1(np.zeros((3, 1))), flat)
        0.0
    """
    return float(stress_Ttt_array(jet.d, pt.g_upper))


def stress_Trt(jet, pt):
    r"""
    Return `T_{rt}` at ``jet``, which needs a position with `r > 0`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import MetricPoint
        sage: from eym_exterior.stress import Jet1, stress_Trt
        sage: H = np.zeros((3, 3)); H[0, 1] = H[1, 0] = 0.01
        sage: stress_Trt(Jet1([[1], [0], [0]], x=[1, 0]), MetricPoint.from_H(H))
        0.01
        sage: stress_Trt(Jet1([[0], [1], [0]], x=[1, 0]), MetricPoint.from_H(H))
        0.0
        sage: stress_Trt(Jet1([[1], [0], [0]], x=[0, 0]), MetricPoint.from_H(H))
        Traceback (most recent call last):
        ...
        ValueError: the radial direction is undefined at r = 0
    """
    return float(stress_Trt_array(jet.d, pt.g_upper, jet._omega()))


def tangential_split(jet, pt):
    r"""
    Return ``(good_sq, H_correction)`` with
    `T_{tt} + T_{rt} = ` ``good_sq + H_correction``.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import build_metric
        sage: from eym_exterior.stress import Jet1, tangential_split
        sage: flat = build_metric(np.zeros((3, 3)))
        sage: tangential_split(Jet1([[1], [1], [0]], x=[5, 0]), flat)
        (2.0, 0.0)
    """
    good, corr = tangential_split_array(jet.d, pt.H_upper, jet._omega())
    return (float(good), float(corr))


def divergence_Tt(jet, pt):
    r"""
    Return `\partial_\mu T^\mu{}_t` at a :class:`Jet2`, using the
    derivatives ``pt.dH``.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import build_metric
        sage: from eym_exterior.stress import Jet2, divergence_Tt
        sage: flat = build_metric(np.zeros((3, 3)))
        sage: d = [[1], [0], [0]]
        sage: dd = np.zeros((3, 3, 1)); dd[1, 1] = 1.0
        sage: divergence_Tt(Jet2(d, dd), flat)
        1.0
        sage: dd[0, 0] = 1.0
        sage: divergence_Tt(Jet2(d, dd), flat)
        0.0
    """
    return float(divergence_Tt_array(jet.d, jet.dd, pt.g_upper, pt.dH))


def energy_density(jet, pt):
    r"""
    Return the energy density, which equals `T_{tt}`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import MetricPoint
        sage: from eym_exterior.stress import Jet1, energy_density
        sage: H = np.zeros((3, 3)); H[0, 0] = -0.1
        sage: energy_density(Jet1([[1], [0], [0]]), MetricPoint.from_H(H))  # abs tol 1e-15
        0.55
    """
    return float(energy_density_array(jet.d, pt.g_upper))


def lift_radial_jet(phi_t, phi_r, phi_tt, phi_tr, phi_rr, r, metric, n):
    r"""
    Lift radial data on the ray `x = r e_1` to full `(n+1)`-dimensional
    jets.

    INPUT:

    - ``phi_t``, ``phi_r``, ``phi_tt``, ``phi_tr``, ``phi_rr`` -- arrays of
      shape ``(J+1, dim)`` of `t` and `r` derivatives of one radial
      component
    - ``r`` -- the grid points
    - ``metric`` -- a :class:`~eym_exterior.geometry.RayMetric`
    - ``n`` -- the space dimension

    OUTPUT:

    A dictionary with arrays ``d``, ``dd``, ``G``, ``H``, ``dH`` and
    ``omega`` in the layout of the array kernels. Angular second
    derivatives are `\partial_k \partial_k \Phi = \partial_r \Phi / r`
    and the angular derivatives of `H` are `H^{tr}/r` and `H^{rr}/r`; at
    `r = 0` these are replaced by their limits `\partial_r^2 \Phi`,
    `\partial_r H^{tr}` and `\partial_r H^{rr}`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.geometry import RayMetric
        sage: from eym_exterior.stress import lift_radial_jet, stress_Ttt_array
        sage: r = np.linspace(0, 2, 5)
        sage: one, zero = np.ones((5, 1)), np.zeros((5, 1))
        sage: L = lift_radial_jet(one, zero, zero, zero, zero, r, RayMetric.flat(5), 3)
        sage: L['d'].shape, L['dd'].shape, L['dH'].shape
        ((5, 4, 1), (5, 4, 4, 1), (5, 4, 4, 4))
        sage: stress_Ttt_array(L['d'], L['G']).tolist()
        [0.5, 0.5, 0.5, 0.5, 0.5]
    """
    r = np.asarray(r, dtype=float)
    J1 = r.shape[0]
    dim = phi_t.shape[-1]
    safe_r = np.where(r > 0, r, 1.0)[:, None]
    at_origin = (r == 0)[:, None]

    d = np.zeros((J1, n + 1, dim))
    d[:, 0] = phi_t
    d[:, 1] = phi_r

    dd = np.zeros((J1, n + 1, n + 1, dim))
    dd[:, 0, 0] = phi_tt
    dd[:, 0, 1] = dd[:, 1, 0] = phi_tr
    dd[:, 1, 1] = phi_rr
    angular = np.where(at_origin, phi_rr, phi_r / safe_r)
    for k in range(2, n + 1):
        dd[:, k, k] = angular

    H = metric.H_full(n)
    G = H + minkowski(n)

    dH = np.zeros((J1, n + 1, n + 1, n + 1))
    dH[:, 0] = ray_tensor_full(metric.dH_t, n)
    dH[:, 1] = ray_tensor_full(metric.dH_r, n)
    h_tr = np.where(r == 0, metric.dH_r[1], metric.H[1] / safe_r[:, 0])
    h_rr = np.where(r == 0, metric.dH_r[2], metric.H[2] / safe_r[:, 0])
    for k in range(2, n + 1):
        dH[:, k, 0, k] = dH[:, k, k, 0] = h_tr
        dH[:, k, 1, k] = dH[:, k, k, 1] = h_rr

    omega = np.zeros((J1, n))
    omega[:, 0] = 1.0
    return {'d': d, 'dd': dd, 'G': G, 'H': H, 'dH': dH, 'omega': omega}


def random_admissible_H(rng, samples, n, fraction=0.9):
    r"""
    Return ``samples`` random symmetric matrices `H` with
    `\sum |H_{\mu\nu}| \leq u \cdot` ``fraction`` `/ n`, `u` uniform in
    `[0, 1)`.
    """
    A = rng.uniform(-1.0, 1.0, (samples, n + 1, n + 1))
    A = A + A.transpose(0, 2, 1)
    total = np.sum(np.abs(A), axis=(1, 2))
    u = rng.uniform(0.0, 1.0, samples)
    return A * (u * fraction / n / total)[:, None, None]


def random_unit_vectors(rng, samples, n):
    """
    Return ``samples`` random unit vectors in `\\mathbb{R}^n`.
    """
    v = rng.standard_normal((samples, n))
    return v / np.linalg.norm(v, axis=1)[:, None]


def identity_suite(n_values=(2, 3, 4, 5, 6), samples=10000, seed=0, dim=3):
    r"""
    Check the pointwise stress identities on seeded random jets.

    For every `n` in ``n_values``, ``samples`` random jets are drawn with a
    counter-based generator keyed by ``seed``, together with random
    admissible `H` and random radial directions. The checks are:

    - ``split``: `T_{tt} + T_{rt}` minus ``good_sq + H_correction``
    - ``cross_terms``: `T_{tt} + T^t{}_t` from the full contraction
    - ``positivity``: the most negative ``good_sq`` (reported as
      `\max(0, -\min)`)
    - ``density_band``: how far the density ratio to
      `\frac{1}{2} |\partial \Phi|^2` leaves `[1 - 0.9/n, 1 + 0.9/n]`
    - ``flat_divergence``: `\partial_\mu T^\mu{}_t` for `H = 0` and
      `\Box_m \Phi = 0`

    OUTPUT: a JSON-ready dictionary with the per-identity maximal residual,
    the sample count and the worst jet of each identity.

    EXAMPLES::

        sage: from eym_exterior.stress import identity_suite
        sage: R = identity_suite(n_values=[2, 4], samples=500, seed=1)
        sage: R['max_residual'] < 1e-12
        True
        sage: sorted(R['identities'])
        ['cross_terms', 'density_band', 'flat_divergence', 'positivity', 'split']
        sage: R['identities']['split']['samples']
        1000
        sage: identity_suite(samples=10, seed=5) == identity_suite(samples=10, seed=5)
        True
    """
    seed = int(seed)
    samples = int(samples)
    rng = np.random.Generator(np.random.Philox(key=seed))
    names = ['split', 'cross_terms', 'positivity', 'density_band', 'flat_divergence']
    worst = {name: {'residual': 0.0, 'n': None, 'jet': None} for name in names}
    per_n = {}

    def record(name, n, res, d):
        k = int(np.argmax(res))
        value = float(res[k])
        if worst[name]['n'] is None or value > worst[name]['residual']:
            worst[name] = {'residual': value, 'n': n, 'jet': d[k].tolist()}
        return value

    for n in n_values:
        n = int(n)
        d = rng.standard_normal((samples, n + 1, dim))
        H = random_admissible_H(rng, samples, n)
        G = H + minkowski(n)
        omega = random_unit_vectors(rng, samples, n)

        Ttt = stress_Ttt_array(d, G)
        Trt = stress_Trt_array(d, G, omega)
        good, corr = tangential_split_array(d, H, omega)
        mixed = stress_mixed_array(d, G)
        density = energy_density_array(d, G)
        half_sq = 0.5 * np.sum(d ** 2, axis=(1, 2))
        ratio = density / half_sq
        band = 0.9 / n

        dd = rng.standard_normal((samples, n + 1, n + 1, dim))
        dd = dd + dd.transpose(0, 2, 1, 3)
        dd[:, 0, 0] = np.einsum('sii...->s...', dd[:, 1:, 1:])
        div = divergence_Tt_array(d, dd, np.broadcast_to(minkowski(n), G.shape),
                                  np.zeros((samples, n + 1, n + 1, n + 1)))

        per_n[str(n)] = {
            'split': record('split', n, np.abs(Ttt + Trt - good - corr), d),
            'cross_terms': record('cross_terms', n, np.abs(Ttt + mixed[:, 0, 0]), d),
            'positivity': record('positivity', n, np.maximum(0.0, -good), d),
            'density_band': record('density_band', n,
                                   np.maximum(0.0, np.abs(ratio - 1) - band), d),
            'flat_divergence': record('flat_divergence', n, np.abs(div), d),
        }
        verbose("identity suite n=%s: %s" % (n, per_n[str(n)]), level=2)

    identities = {name: {'max_residual': worst[name]['residual'],
                         'samples': samples * len(n_values),
                         'worst_n': worst[name]['n'],
                         'worst_jet': worst[name]['jet']}
                  for name in names}
    return {'seed': seed,
            'n_values': [int(n) for n in n_values],
            'identities': identities,
            'per_n': per_n,
            'max_residual': max(v['max_residual'] for v in identities.values())}

