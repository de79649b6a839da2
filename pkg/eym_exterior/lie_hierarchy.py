r"""
Lie derivative hierarchy on radial fields

Theory
======

For radial unknowns `\Phi(t, r)` the translation `\partial_t` and the
scaling field `S = t \partial_t + r \partial_r` preserve radial symmetry
and may be iterated freely. Every word `Z^I` in them is an exact
differential operator

.. MATH::

    Z^I = \sum_{a, b} c_{ab}(t, r) \, \partial_t^a \partial_r^b,
    \qquad c_{ab} \in \QQ[t, r],

which is built once and evaluated on grids from the time jet
`\partial_t^a \Phi` and repeated radial differences.

A boost `Z_{0i} = x^i \partial_t + t \partial_i` maps a radial field to
`\omega_i (r \partial_t + t \partial_r) \Phi`; only the radial profile is
stored and its squared norms carry the angular factor
`\int_{S^{n-1}} \omega_i^2 \, d\sigma / |S^{n-1}| = 1/n`. Rotations vanish on
radial fields. Iterated boosts and rotations leave radial symmetry and are
not part of the hierarchy, so energies built on it are lower bounds for the
energies over the full commuting family.

EXAMPLES::

    sage: from eym_exterior.lie_hierarchy import word_operator
    sage: sorted(word_operator(('d_t', 'S')).items())
    [((1, 0), 1), ((1, 1), r), ((2, 0), t)]

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

import itertools

import numpy as np

from sage.misc.cachefunc import cached_function
from sage.misc.verbose import verbose
from sage.rings.polynomial.polynomial_ring_constructor import PolynomialRing
from sage.rings.rational_field import QQ
from sage.structure.sage_object import SageObject
from eym_exterior.component_field import ComponentField
from eym_exterior.radial_grid import deriv_r
from eym_exterior.vector_fields import VectorFieldId

N_MAX = 4

Z_SUBFAMILY_LABEL = "Z-subfamily energy"

LETTERS = {'d_t': VectorFieldId.translation(0), 'S': VectorFieldId.scaling()}


@cached_function
def radial_ring():
    r"""
    Return `\QQ[t, r]`.
    """
    return PolynomialRing(QQ, ['t', 'r'])


def _compose(letter, op):
    R = radial_ring()
    t, r = R.gens()
    out = {}

    def add(key, c):
        c = out.get(key, R.zero()) + c
        if c:
            out[key] = c
        else:
            out.pop(key, None)

    for (a, b), c in op.items():
        if letter == 'd_t':
            add((a, b), c.derivative(t))
            add((a + 1, b), c)
        elif letter == 'd_r':
            add((a, b), c.derivative(r))
            add((a, b + 1), c)
        elif letter == 'S':
            add((a, b), t * c.derivative(t) + r * c.derivative(r))
            add((a + 1, b), t * c)
            add((a, b + 1), r * c)
        elif letter == 'boost':
            add((a, b), r * c.derivative(t) + t * c.derivative(r))
            add((a + 1, b), r * c)
            add((a, b + 1), t * c)
        else:
            raise ValueError("invalid type key")
    return out


@cached_function
def word_operator(word):
    r"""
    Return the operator `Z^I` of a word as a dictionary
    ``{(a, b): c_ab}``.

    INPUT:

    - ``word`` -- tuple of letters ``'d_t'``, ``'d_r'``, ``'S'`` and
      ``'boost'`` (the radial profile `r \partial_t + t \partial_r`); the
      rightmost letter acts first

    EXAMPLES::

        sage: from eym_exterior.lie_hierarchy import word_operator
        sage: word_operator(())
        {(0, 0): 1}
        sage: sorted(word_operator(('S', 'S')).items())
        [((0, 1), r), ((0, 2), r^2), ((1, 0), t), ((1, 1), 2*t*r), ((2, 0), t^2)]
        sage: sorted(word_operator(('d_r', 'boost')).items())
        [((0, 2), t), ((1, 0), 1), ((1, 1), r)]
    """
    op = {(0, 0): radial_ring().one()}
    for letter in reversed(word):
        op = _compose(letter, op)
    return op


def _evaluate_coefficient(c, t, r):
    value = np.zeros_like(r)
    for (i, j), coeff in c.dict().items():
        value = value + float(coeff) * t ** i * r ** j
    return value


class _JetCache:
    """
    Radial derivatives `\\partial_r^b \\partial_t^a \\Phi` of a field.
    """
    def __init__(self, field):
        self.field = field
        self.cache = {}

    def time(self, a):
        F = self.field
        if a == 0:
            return F.phi
        if a == 1:
            return F.pi
        if F.time_jet is None or len(F.time_jet) <= a:
            raise ValueError("time derivatives up to order %s are needed" % a)
        return np.asarray(F.time_jet[a], dtype=float)

    def __call__(self, a, b):
        key = (a, b)
        if key not in self.cache:
            if b == 0:
                self.cache[key] = self.time(a)
            else:
                base = self(a, b - 1)
                self.cache[key] = np.array([
                    deriv_r(base[c], self.field.grid, parity=_parity(p, b - 1))
                    for c, p in enumerate(self.field.parities)])
        return self.cache[key]


def _parity(parity, b):
    if parity is None or b % 2 == 0:
        return parity
    return 'odd' if parity == 'even' else 'even'


def apply_operator(op, jets, t, r):
    """
    Evaluate the operator ``op`` on the jets at time ``t``.

    Terms whose coefficient vanishes identically at ``t`` are skipped, so
    their jets are not required.
    """
    out = None
    for (a, b), c in sorted(op.items()):
        coeff = _evaluate_coefficient(c, t, r)
        if not np.any(coeff):
            continue
        term = coeff[None, :, None] * jets(a, b)
        out = term if out is None else out + term
    if out is None:
        out = np.zeros_like(jets(0, 0))
    return out


class HierarchyEntry(SageObject):
    r"""
    One member `Z^I \Phi` of the hierarchy.

    Attributes are ``word`` (tuple of :class:`VectorFieldId`),
    ``norm_weight`` (the factor of its squared norms) and ``field`` (a
    :class:`~eym_exterior.component_field.ComponentField` with `Z^I \Phi`,
    `\partial_t Z^I \Phi` and `\partial_r Z^I \Phi`).
    """
    def __init__(self, word, norm_weight, field):
        """
        Initialize ``self``.
        """
        self.word = tuple(word)
        self.norm_weight = float(norm_weight)
        self.field = field

    def label(self):
        """
        Return a short name of the word.
        """
        if not self.word:
            return 'id'
        names = {VectorFieldId.translation(0): 'd_t', VectorFieldId.scaling(): 'S'}
        return " ".join(names.get(Z, repr(Z)) for Z in self.word)

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return "Lie derivative %s with norm weight %r" % (self.label(), self.norm_weight)

    def order(self):
        return len(self.word)


def hierarchy_words(N):
    """
    Return the words of length at most ``N`` over ``('d_t', 'S')``.

    EXAMPLES::

        sage: from eym_exterior.lie_hierarchy import hierarchy_words
        sage: hierarchy_words(2)
        [(), ('d_t',), ('S',), ('d_t', 'd_t'), ('d_t', 'S'), ('S', 'd_t'), ('S', 'S')]
    """
    return [w for k in range(N + 1) for w in itertools.product(('d_t', 'S'), repeat=k)]


def _derived(field, jets, word, parities):
    t = field.t
    r = field.grid.points()
    phi = apply_operator(word_operator(word), jets, t, r)
    pi = apply_operator(word_operator(('d_t',) + word), jets, t, r)
    phi_r = apply_operator(word_operator(('d_r',) + word), jets, t, r)
    return ComponentField(field.grid, field.algebra, field.names, phi, pi, t=t,
                          parities=parities, phi_r=phi_r)


def lie_hierarchy(field, grid, N):
    r"""
    Return the Lie derivatives of ``field`` up to order ``N``.

    INPUT:

    - ``field`` -- a :class:`~eym_exterior.component_field.ComponentField`;
      when words of order `k \geq 1` occur, its ``time_jet`` must hold
      `\partial_t^a \Phi` for `a \leq k + 1` (except where the
      coefficient vanishes at the current time)
    - ``grid`` -- the grid of ``field``
    - ``N`` -- the order, at most `4`

    OUTPUT:

    A list of :class:`HierarchyEntry`: all words over `\{\partial_t, S\}` of
    length at most ``N``, starting with the field itself, then, for
    `N \geq 1`, one boost with norm weight `1/n` and one rotation
    (identically zero) when `n \geq 2`.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: from eym_exterior.radial_grid import RadialGrid
        sage: from eym_exterior.component_field import ComponentField
        sage: from eym_exterior.lie_hierarchy import lie_hierarchy
        sage: G = RadialGrid(4, 4, 1/8); r = G.points()
        sage: phi = (r * r)[None, :, None]; zero = np.zeros_like(phi)
        sage: F = ComponentField(G, GaugeAlgebra('abelian'), ('u',), phi, zero,
        ....:                    time_jet=np.array([phi, zero, zero]))
        sage: L = lie_hierarchy(F, G, 1)
        sage: [e.label() for e in L]
        ['id', 'd_t', 'S', 'Boost(1)', 'Rotation(1, 2)']
        sage: L[0].field is F
        True
        sage: bool(np.max(np.abs(L[2].field.phi[0, :, 0] - (r + r) * r)) < 1e-10)
        True
        sage: L[3].norm_weight, float(np.max(np.abs(L[4].field.phi)))
        (0.25, 0.0)
        sage: lie_hierarchy(F, G, 5)
        Traceback (most recent call last):
        ...
        ValueError: level 5 exceeds the stencil accuracy budget N_max = 4
    """
    N = int(N)
    if N > N_MAX:
        raise ValueError("level %s exceeds the stencil accuracy budget N_max = %s"
                         % (N, N_MAX))
    if N < 0:
        raise ValueError("the level must be nonnegative")
    if grid is not field.grid:
        raise ValueError("the field lives on another grid")
    jets = _JetCache(field)
    entries = [HierarchyEntry((), 1.0, field)]
    for word in hierarchy_words(N)[1:]:
        Z = tuple(LETTERS[letter] for letter in word)
        entries.append(HierarchyEntry(Z, 1.0, _derived(field, jets, word, field.parities)))
    if N >= 1:
        none = (None,) * len(field.names)
        entries.append(HierarchyEntry((VectorFieldId.boost(1),), 1.0 / grid.n,
                                      _derived(field, jets, ('boost',), none)))
        if grid.n >= 2:
            zero = ComponentField.zero(grid, field.algebra, field.names, t=field.t)
            entries.append(HierarchyEntry((VectorFieldId.rotation(1, 2),), 1.0, zero))
    verbose("Lie hierarchy of order %s at t=%s: %s entries" % (N, field.t, len(entries)),
            level=3)
    return entries
