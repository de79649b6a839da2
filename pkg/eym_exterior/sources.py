r"""
Source terms of the reduced Einstein-Yang-Mills system

Theory
======

In the Lorenz gauge and in wave coordinates the potential `A` and the
perturbation `h = g - m` satisfy quasilinear wave equations
`g^{\alpha\beta} \partial_\alpha \partial_\beta \Phi_V = S_V`. With
`\widetilde{F}_{\alpha\beta} = \partial_\alpha A_\beta - \partial_\beta
A_\alpha` and all indices moved with `m`, the sources are

.. MATH::

    S_{A_\sigma} = (\partial_\sigma h^{\alpha\mu}) \partial_\alpha A_\mu
    + B^{\mu\nu}{}_\sigma \big( \widetilde{F}_{\mu\nu} + [A_\mu, A_\nu] \big)
    - [A_\mu, \partial^\mu A_\sigma]
    - [A^\mu, \partial_\mu A_\sigma - \partial_\sigma A_\mu]
    - [A^\mu, [A_\mu, A_\sigma]],

with `B^{\mu\nu}{}_\sigma = \frac{1}{2}(\partial^\mu h^\nu{}_\sigma +
\partial_\sigma h^{\nu\mu} - \partial^\nu h^\mu{}_\sigma)`, and

.. MATH::

    S_{h_{\mu\nu}} = \mathcal{Q}_{\mu\nu}(F, F)
    + \big[ P(\partial_\mu h, \partial_\nu h) + Q_{\mu\nu}(\partial h,
    \partial h) + G_{\mu\nu}(h)(\partial h, \partial h) \big],

where `F = \widetilde{F} + [A, A]` is the curvature and

.. MATH::

    \mathcal{Q}_{\mu\nu}(X, Y) = -4 \langle X_{\mu\beta}, Y_\nu{}^\beta
    \rangle + m_{\mu\nu} \langle X_{\alpha\beta}, Y^{\alpha\beta} \rangle.

The cubic and higher remainders in `h` are not part of the system
implemented here (the *truncated reduced system*). The bracketed
`P, Q, G` terms are off by default; the hook :func:`pqg_default` supplies
the standard weak-null quadratic forms, labelled as unverified.

Every operation works in any frame dimension `k` with `m =
\mathrm{diag}(-1, 1, \dots, 1)`; the solver uses the ray frame `(t, r)`.

EXAMPLES::

    sage: from eym_exterior.gauge_algebra import GaugeAlgebra
    sage: from eym_exterior.stress import Jet1
    sage: from eym_exterior.sources import source_A, source_h
    sage: G = GaugeAlgebra('su2'); e1, e2, e3 = G.basis(); z = G.zero()
    sage: still = Jet1([z, z])
    sage: source_A(1, [e1, e2], [still, still])
    (0.0, -1.0, 0.0)
    sage: source_A(1, [z, z], [still, still])
    (0.0, 0.0, 0.0)

    sage: M = GaugeAlgebra('abelian'); a, = M.basis(); o = M.zero()
    sage: source_h(0, 0, [o, o], [Jet1([o, o]), Jet1([a, o])])
    -2.0

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

import numpy as np

from sage.structure.sage_object import SageObject
from sage.structure.unique_representation import UniqueRepresentation
from eym_exterior.abstract_gauge_algebra import AbstractGaugeAlgebra
from eym_exterior.geometry import minkowski
from eym_exterior.lie_value import LieValue

TRUNCATION_LABEL = "truncated reduced system"

PQG_LABEL = "P/Q/G: weak-null default hook (unverified)"


def _signature(k):
    return np.diag(minkowski(k - 1))


def _bracket(C, x, y):
    return np.einsum('abc,...a,...b->...c', C, x, y)


def curvature_F_array(A, dA, C):
    r"""
    Return the pair ``(F_tilde, AA)`` with `\widetilde{F}_{\alpha\beta}
    = \partial_\alpha A_\beta - \partial_\beta A_\alpha` and
    `[A_\alpha, A_\beta]`.

    INPUT:

    - ``A`` -- array of shape ``(..., k, dim)``
    - ``dA`` -- array of shape ``(..., k, k, dim)`` with
      ``dA[..., lam, mu]`` `= \partial_\lambda A_\mu`
    - ``C`` -- the structure constants
    """
    Ft = dA - np.swapaxes(dA, -3, -2)
    AA = np.einsum('abc,...ma,...nb->...mnc', C, A, A)
    return Ft, AA


def quadratic_form_array(X, Y):
    r"""
    Return `\mathcal{Q}_{\mu\nu}(X, Y)` for arrays of shape
    ``(..., k, k, dim)``.
    """
    s = _signature(X.shape[-2])
    main = -4 * np.einsum('b,...mbc,...nbc->...mn', s, X, Y)
    trace = np.einsum('a,b,...abc,...abc->...', s, s, X, Y)
    return main + np.diag(s) * trace[..., None, None]


def source_A_blocks_array(sigma, A, dA, dh, C):
    r"""
    Return the blocks of `S_{A_\sigma}` as a dictionary of arrays of shape
    ``(..., dim)``.

    INPUT:

    - ``sigma`` -- the component index
    - ``A``, ``dA``, ``C`` -- as for :func:`curvature_F_array`
    - ``dh`` -- array of shape ``(..., k, k, k)`` with
      ``dh[..., lam, mu, nu]`` `= \partial_\lambda h_{\mu\nu}`

    The blocks are ``'h_dA'`` (quadratic, linear in `A`), ``'h_AA'``
    (cubic), ``'A_dA'`` (quadratic in `A`) and ``'AAA'`` (cubic in `A`).

    EXAMPLES:

    Doubling `A` multiplies the pure blocks by `4` and `8`::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.sources import source_A_blocks_array
        sage: C = GaugeAlgebra('su2').structure_constants()
        sage: rng = np.random.default_rng(int(11))
        sage: A, dA = rng.standard_normal((2, 3)), rng.standard_normal((2, 2, 3))
        sage: dh = np.zeros((2, 2, 2))
        sage: one = source_A_blocks_array(1, A, dA, dh, C)
        sage: two = source_A_blocks_array(1, A + A, dA + dA, dh, C)
        sage: (bool(np.allclose(two['A_dA'], float(4) * one['A_dA'])),
        ....:  bool(np.allclose(two['AAA'], float(8) * one['AAA'])))
        (True, True)
    """
    k = A.shape[-2]
    s = _signature(k)
    S = s[:, None] * s[None, :]
    Ft, AA = curvature_F_array(A, dA, C)
    h_dA = np.einsum('...am,...amk->...k', S * dh[..., sigma, :, :], dA)
    D = dh[..., :, :, sigma]
    B = 0.5 * S * (D + dh[..., sigma, :, :] - np.swapaxes(D, -2, -1))
    h_dA = h_dA + np.einsum('...mn,...mnk->...k', B, Ft)
    h_AA = np.einsum('...mn,...mnk->...k', B, AA)
    A_up = s[:, None] * A
    grad = dA[..., :, sigma, :]
    A_dA = -(np.einsum('abc,...ma,...mb->...c', C, A_up, grad)
             + np.einsum('abc,...ma,...mb->...c', C, A_up, grad - dA[..., sigma, :, :]))
    AAA = -np.einsum('abc,...ma,...mb->...c', C, A_up, AA[..., :, sigma, :])
    return {'h_dA': h_dA, 'h_AA': h_AA, 'A_dA': A_dA, 'AAA': AAA}


def pqg_default(dh):
    r"""
    Return weak-null quadratic forms in `\partial h` standing in for
    `P + Q + G`.

    The forms are

    .. MATH::

        P_{\mu\nu} = \frac{1}{4} \mathrm{tr}(\partial_\mu h)
        \mathrm{tr}(\partial_\nu h) - \frac{1}{2} \langle \partial_\mu h,
        \partial_\nu h \rangle, \qquad
        Q_{\mu\nu} = \partial^\alpha h^\beta{}_\mu \, \partial_\alpha
        h_{\beta\nu} - \partial^\alpha h^\beta{}_\mu \, \partial_\beta
        h_{\alpha\nu},

    with `G = 0`; outputs using them carry :data:`PQG_LABEL`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.sources import pqg_default
        sage: float(np.max(np.abs(pqg_default(np.zeros((2, 2, 2))))))
        0.0
    """
    s = _signature(dh.shape[-1])
    tr = np.einsum('a,...maa->...m', s, dh)
    P = (0.25 * tr[..., :, None] * tr[..., None, :]
         - 0.5 * np.einsum('a,b,...mab,...nab->...mn', s, s, dh, dh))
    Q = (np.einsum('a,b,...abm,...abn->...mn', s, s, dh, dh)
         - np.einsum('a,b,...abm,...ban->...mn', s, s, dh, dh))
    return P + Q


def source_h_blocks_array(A, dA, dh, C, include_PQG=False):
    r"""
    Return the blocks of `S_{h_{\mu\nu}}` as a dictionary of arrays of
    shape ``(..., k, k)``.

    The blocks are ``'maxwell'`` `\mathcal{Q}(\widetilde{F},
    \widetilde{F})`, ``'cross'`` `\mathcal{Q}(\widetilde{F}, [A,A]) +
    \mathcal{Q}([A,A], \widetilde{F})`, ``'pure_bracket'``
    `\mathcal{Q}([A,A],[A,A])` and, when ``include_PQG``, ``'pqg'``.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.sources import source_h_blocks_array
        sage: C = GaugeAlgebra('abelian').structure_constants()
        sage: dA = np.zeros((2, 2, 1)); dA[0, 1, 0] = 1.0
        sage: b = source_h_blocks_array(np.zeros((2, 1)), dA, np.zeros((2, 2, 2)), C)
        sage: float(b['maxwell'][0, 0]), float(b['maxwell'][1, 1])
        (-2.0, 2.0)
        sage: float(np.max(np.abs(b['cross'])))
        0.0
    """
    Ft, AA = curvature_F_array(A, dA, C)
    blocks = {'maxwell': quadratic_form_array(Ft, Ft),
              'cross': quadratic_form_array(Ft, AA) + quadratic_form_array(AA, Ft),
              'pure_bracket': quadratic_form_array(AA, AA)}
    if include_PQG:
        blocks['pqg'] = pqg_default(dh)
    return blocks


def _point_arrays(A, A_jets, h_jets):
    A = np.array([a.to_array() if isinstance(a, LieValue) else np.asarray(a, dtype=float)
                  for a in A])
    k = A.shape[0]
    dA = np.stack([jet.d for jet in A_jets], axis=1)
    if dA.shape != (k, k, A.shape[1]):
        raise ValueError("one jet of %s derivatives per component is needed" % k)
    dh = np.zeros((k, k, k))
    for (mu, nu), jet in (h_jets or {}).items():
        dh[:, mu, nu] = dh[:, nu, mu] = jet.d[:, 0]
    return A, dA, dh


def _algebra_of(A):
    for a in A:
        if isinstance(a, LieValue):
            return a.parent()
    raise ValueError("the potential must be given as Lie values")


def source_A(sigma, A, A_jets, h_jets=None):
    r"""
    Return `S_{A_\sigma}` at a point.

    INPUT:

    - ``sigma`` -- the component index
    - ``A`` -- list of `k` :class:`~eym_exterior.lie_value.LieValue`,
      the components `A_\mu`
    - ``A_jets`` -- list of `k` :class:`~eym_exterior.stress.Jet1`; the
      `\lambda`-th derivative of the `\mu`-th jet is
      `\partial_\lambda A_\mu`
    - ``h_jets`` -- (default: ``None`` for `h = 0`) dictionary mapping
      pairs `(\mu, \nu)` with `\mu \leq \nu` to scalar jets of
      `h_{\mu\nu}`

    OUTPUT: a :class:`~eym_exterior.lie_value.LieValue`
    """
    G = _algebra_of(A)
    A, dA, dh = _point_arrays(A, A_jets, h_jets)
    blocks = source_A_blocks_array(int(sigma), A, dA, dh, G.structure_constants())
    return G.element(sum(blocks.values()))


def source_h(mu, nu, A, A_jets, h_jets=None, include_PQG=False):
    r"""
    Return `S_{h_{\mu\nu}}` at a point.

    The arguments are as for :func:`source_A`.
    """
    G = _algebra_of(A)
    A, dA, dh = _point_arrays(A, A_jets, h_jets)
    blocks = source_h_blocks_array(A, dA, dh, G.structure_constants(), include_PQG)
    return float(sum(b[int(mu), int(nu)] for b in blocks.values()))


def curvature_F(A, A_jets):
    r"""
    Return the curvature `F_{\alpha\beta} = \partial_\alpha A_\beta -
    \partial_\beta A_\alpha + [A_\alpha, A_\beta]` as a matrix of
    :class:`~eym_exterior.lie_value.LieValue`.

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.stress import Jet1
        sage: from eym_exterior.sources import curvature_F, curvature_norm
        sage: G = GaugeAlgebra('su2'); e1, e2, e3 = G.basis(); z = G.zero()
        sage: F = curvature_F([e1, e2], [Jet1([z, z]), Jet1([z, z])])
        sage: F[0][1], F[1][0], F[0][0]
        ((0.0, 0.0, 1.0), (0.0, 0.0, -1.0), (0.0, 0.0, 0.0))
        sage: curvature_norm(F)
        2.0

    With `A_r = f(t) e_1` the curvature is `F_{tr} = f'(t) e_1`::

        sage: M = GaugeAlgebra('abelian'); a, = M.basis(); o = M.zero()
        sage: curvature_F([o, o], [Jet1([o, o]), Jet1([a * 3, o])])[0][1]
        (3.0)
    """
    G = _algebra_of(A)
    A, dA, _ = _point_arrays(A, A_jets, None)
    Ft, AA = curvature_F_array(A, dA, G.structure_constants())
    F = Ft + AA
    return [[G.element(v) for v in row] for row in F]


def _as_field_array(F):
    if isinstance(F, (list, tuple)):
        return np.array([[v.to_array() for v in row] for row in F])
    return np.asarray(F, dtype=float)


def curvature_norm(F):
    r"""
    Return the gauge invariant norm `|F|^2 = \sum_{\alpha, \beta}
    |F_{\alpha\beta}|^2`.

    ``F`` is a matrix of Lie values or an array of shape
    ``(..., k, k, dim)``; arrays give arrays of shape ``(...)``.
    """
    value = np.sum(_as_field_array(F) ** 2, axis=(-3, -2, -1))
    return float(value) if np.ndim(value) == 0 else value


def yang_mills_stress(F, m):
    r"""
    Return `T_{\mu\nu}(F) = \langle F_{\mu\beta}, F_\nu{}^\beta \rangle
    - \frac{1}{4} m_{\mu\nu} \langle F_{\alpha\beta}, F^{\alpha\beta}
    \rangle`.

    INPUT:

    - ``F`` -- matrix of Lie values or array of shape ``(k, k, dim)``
    - ``m`` -- the metric used to move indices, a ``(k, k)`` array

    EXAMPLES:

    The trace vanishes in four spacetime dimensions::

        sage: import numpy as np
        sage: from eym_exterior.geometry import minkowski
        sage: from eym_exterior.sources import yang_mills_stress
        sage: X = np.random.default_rng(int(2)).standard_normal((4, 4, 3))
        sage: F = X - X.transpose(1, 0, 2)
        sage: m = minkowski(3)
        sage: T = yang_mills_stress(F, m)
        sage: float(np.einsum('ab,ab->', np.linalg.inv(m), T))  # abs tol 1e-12
        0.0
        sage: bool(np.allclose(T, T.T))
        True
    """
    F = _as_field_array(F)
    m = np.asarray(m, dtype=float)
    m_inv = np.linalg.inv(m)
    main = np.einsum('bd,mbc,ndc->mn', m_inv, F, F)
    full = np.einsum('ac,bd,abk,cdk->', m_inv, m_inv, F, F)
    return main - 0.25 * m * full


class SourceConfig(UniqueRepresentation, SageObject):
    r"""
    Selection of the source terms.

    INPUT:

    - ``mode`` -- (default: ``'coupled'``) ``'linear'`` (no sources),
      ``'yang_mills_only'`` (the metric is a frozen background) or
      ``'coupled'``
    - ``include_PQG`` -- (default: ``False``) add :func:`pqg_default` to the
      metric sources
    - ``group`` -- (default: ``'su2'``) key of the gauge algebra

    EXAMPLES::

        sage: from eym_exterior.sources import SourceConfig
        sage: S = SourceConfig(); S
        Source configuration (mode=coupled, group=su2, P/Q/G off)
        sage: S.components()
        ('A_t', 'A_r', 'h_tt', 'h_tr', 'h_rr')
        sage: SourceConfig('yang_mills_only').components()
        ('A_t', 'A_r')
        sage: SourceConfig(include_PQG=True).labels()
        ['truncated reduced system', 'P/Q/G: weak-null default hook (unverified)']
        sage: SourceConfig('yang_mills_only', include_PQG=True)
        Traceback (most recent call last):
        ...
        ValueError: P/Q/G terms need the coupled mode
        sage: SourceConfig(group='su3')
        Traceback (most recent call last):
        ...
        ValueError: invalid type key
    """
    modes = ['linear', 'yang_mills_only', 'coupled']

    @staticmethod
    def __classcall__(cls, mode='coupled', include_PQG=False, group='su2'):
        """
        Normalize arguments and set class.
        """
        return super().__classcall__(cls, str(mode), bool(include_PQG), str(group))

    def __init__(self, mode, include_PQG, group):
        """
        Initialize ``self``.
        """
        self.mode = mode
        self.include_PQG = include_PQG
        self.group = group
        self.is_valid()

    def is_valid(self) -> bool:
        """
        Return whether ``self`` is consistent, or raise a ``ValueError``.
        """
        if self.mode not in self.modes:
            raise ValueError("mode must be one of %s" % ", ".join(self.modes))
        if self.group not in AbstractGaugeAlgebra.keys:
            raise ValueError("invalid type key")
        if self.include_PQG and self.mode != 'coupled':
            raise ValueError("P/Q/G terms need the coupled mode")
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Source configuration (mode=%s, group=%s, P/Q/G %s)"
                % (self.mode, self.group, "on" if self.include_PQG else "off"))

    def components(self):
        """
        Return the names of the evolved components.
        """
        if self.mode == 'yang_mills_only':
            return ('A_t', 'A_r')
        return ('A_t', 'A_r', 'h_tt', 'h_tr', 'h_rr')

    def labels(self):
        """
        Return the labels every output touched by ``self`` carries.
        """
        labels = [TRUNCATION_LABEL]
        if self.include_PQG:
            labels.append(PQG_LABEL)
        return labels


def ray_sources(config, algebra, names, A, dA, dh):
    r"""
    Return the sources of the components ``names`` on a grid.

    INPUT:

    - ``config`` -- a :class:`SourceConfig`
    - ``algebra`` -- the gauge algebra
    - ``names`` -- the component names
    - ``A``, ``dA``, ``dh`` -- arrays over the grid in the ray frame
      `(t, r)`, of shapes ``(J+1, 2, dim)``, ``(J+1, 2, 2, dim)`` and
      ``(J+1, 2, 2, 2)`` as in :func:`source_A_blocks_array`

    OUTPUT: an array of shape ``(len(names), J+1, dim)``; metric
    components use basis slot `0`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.sources import SourceConfig, ray_sources
        sage: G = GaugeAlgebra('su2')
        sage: A = np.zeros((4, 2, 3)); A[:, 0, 0] = 1.0; A[:, 1, 1] = 1.0
        sage: names = SourceConfig().components()
        sage: S = ray_sources(SourceConfig(), G, names, A, np.zeros((4, 2, 2, 3)), np.zeros((4, 2, 2, 2)))
        sage: S[1, 0].tolist(), S[2, 0].tolist()
        ([0.0, -1.0, 0.0], [-2.0, 0.0, 0.0])
        sage: float(np.max(np.abs(ray_sources(SourceConfig('linear'), G, names, A,
        ....:     np.zeros((4, 2, 2, 3)), np.zeros((4, 2, 2, 2))))))
        0.0
    """
    J1 = A.shape[0]
    out = np.zeros((len(names), J1, algebra.dimension()))
    if config.mode == 'linear':
        return out
    C = algebra.structure_constants()
    h_blocks = None
    for c, name in enumerate(names):
        if name.startswith('A_'):
            sigma = {'A_t': 0, 'A_r': 1}[name]
            out[c] = sum(source_A_blocks_array(sigma, A, dA, dh, C).values())
        elif config.mode == 'coupled':
            if h_blocks is None:
                h_blocks = sum(source_h_blocks_array(A, dA, dh, C, config.include_PQG).values())
            mu, nu = {'h_tt': (0, 0), 'h_tr': (0, 1), 'h_rr': (1, 1)}[name]
            out[c, :, 0] = h_blocks[:, mu, nu]
    return out
