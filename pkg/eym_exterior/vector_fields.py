r"""
Minkowski vector fields

Theory
======

The commuting family on `\mathbb{R}^{1+n}` consists of the translations
`\partial_\mu`, the Lorentz fields

.. MATH::

    Z_{\alpha\beta} = x_\beta \partial_\alpha - x_\alpha \partial_\beta,
    \qquad x_0 = -t,

split into rotations `Z_{ij}` and boosts `Z_{0i} = x^i \partial_t + t
\partial_i`, and the scaling field `S = t \partial_t + x^i \partial_i`.

Fields act exactly on polynomials with rational coefficients in
`t, x^1, \dots, x^n`. The classical relations

.. MATH::

    [\Box_m, Z_{\alpha\beta}] = 0, \qquad [\Box_m, S] = 2 \Box_m, \qquad
    [S, \partial_\mu] = -\partial_\mu,

with `\Box_m = -\partial_t^2 + \sum_i \partial_i^2`, are checked as
polynomial identities by :func:`commutator_table_check`.

EXAMPLES::

    sage: from eym_exterior.vector_fields import VectorFieldId, apply_Z_exact, minkowski_ring
    sage: R = minkowski_ring(2); t, x1, x2 = R.gens()
    sage: apply_Z_exact(VectorFieldId.scaling(), t*x1, R)
    2*t*x1
    sage: apply_Z_exact(VectorFieldId.rotation(1, 2), x1^2 + x2^2, R)
    0
    sage: apply_Z_exact(VectorFieldId.boost(1), t^2 - x1^2, R)
    0

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

from sage.misc.cachefunc import cached_function
from sage.misc.misc_c import prod
from sage.misc.verbose import verbose
from sage.rings.polynomial.polynomial_ring_constructor import PolynomialRing
from sage.rings.rational_field import QQ
from sage.structure.sage_object import SageObject
from sage.structure.unique_representation import UniqueRepresentation

MAX_DEGREE = 8


class VectorFieldId(UniqueRepresentation, SageObject):
    r"""
    A member of the commuting family of Minkowski vector fields.

    INPUT:

    - ``tag`` -- one of ``'translation'``, ``'rotation'``, ``'boost'``,
      ``'scaling'``
    - ``indices`` -- `\mu` for a translation, `(i, j)` with `i \neq j`
      for a rotation, `i` for a boost, nothing for the scaling field

    EXAMPLES::

        sage: from eym_exterior.vector_fields import VectorFieldId
        sage: VectorFieldId.translation(0), VectorFieldId.boost(2)
        (Translation(0), Boost(2))
        sage: VectorFieldId('rotation', 1, 2) is VectorFieldId.rotation(1, 2)
        True
        sage: VectorFieldId.rotation(1, 1)
        Traceback (most recent call last):
        ...
        ValueError: a rotation needs two distinct spatial indices
        sage: VectorFieldId('dilation')
        Traceback (most recent call last):
        ...
        ValueError: invalid type key
    """
    keys = ['translation', 'rotation', 'boost', 'scaling']

    @staticmethod
    def __classcall__(cls, tag, *indices):
        """
        Normalize arguments and set class.
        """
        return super().__classcall__(cls, str(tag), *[int(i) for i in indices])

    def __init__(self, tag, *indices):
        """
        Initialize ``self``.
        """
        self.tag = tag
        self.indices = indices
        self.is_valid()

    @classmethod
    def translation(cls, mu):
        return cls('translation', mu)

    @classmethod
    def rotation(cls, i, j):
        return cls('rotation', i, j)

    @classmethod
    def boost(cls, i):
        return cls('boost', i)

    @classmethod
    def scaling(cls):
        return cls('scaling')

    def is_valid(self) -> bool:
        """
        Return whether the tag and indices are consistent, or raise a
        ``ValueError``.
        """
        if self.tag not in self.keys:
            raise ValueError("invalid type key")
        arity = {'translation': 1, 'rotation': 2, 'boost': 1, 'scaling': 0}[self.tag]
        if len(self.indices) != arity:
            raise ValueError("%s takes %s indices" % (self.tag, arity))
        if self.tag == 'translation' and self.indices[0] < 0:
            raise ValueError("indices must be nonnegative")
        if self.tag == 'boost' and self.indices[0] < 1:
            raise ValueError("a boost needs a spatial index")
        if self.tag == 'rotation':
            i, j = self.indices
            if i < 1 or j < 1 or i == j:
                raise ValueError("a rotation needs two distinct spatial indices")
        return True

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        if self.tag == 'scaling':
            return "Scaling"
        return "%s(%s)" % (self.tag.capitalize(), ", ".join(str(i) for i in self.indices))

    def is_lorentz(self):
        """
        Return whether ``self`` is a rotation or a boost.
        """
        return self.tag in ('rotation', 'boost')

    def coefficients(self, R):
        r"""
        Return the coefficients `c^\mu` with ``self`` `= c^\mu \partial_\mu`
        as elements of ``R``.

        EXAMPLES::

            sage: from eym_exterior.vector_fields import VectorFieldId, minkowski_ring
            sage: R = minkowski_ring(3)
            sage: VectorFieldId.boost(2).coefficients(R)
            [x2, 0, t, 0]
            sage: VectorFieldId.rotation(1, 3).coefficients(R)
            [0, x3, 0, -x1]
            sage: VectorFieldId.translation(4).coefficients(R)
            Traceback (most recent call last):
            ...
            ValueError: index 4 exceeds the dimension n=3
        """
        x = R.gens()
        n = len(x) - 1
        if any(i > n for i in self.indices):
            raise ValueError("index %s exceeds the dimension n=%s"
                             % (max(self.indices), n))
        c = [R.zero()] * (n + 1)
        if self.tag == 'translation':
            c[self.indices[0]] = R.one()
        elif self.tag == 'scaling':
            c = list(x)
        elif self.tag == 'boost':
            i = self.indices[0]
            c[0] = x[i]
            c[i] = x[0]
        else:
            i, j = self.indices
            c[i] = x[j]
            c[j] = -x[i]
        return c


@cached_function
def minkowski_ring(n):
    r"""
    Return `\QQ[t, x_1, \dots, x_n]`.

    EXAMPLES::

        sage: from eym_exterior.vector_fields import minkowski_ring
        sage: minkowski_ring(2)
        Multivariate Polynomial Ring in t, x1, x2 over Rational Field
    """
    n = int(n)
    if n < 1:
        raise ValueError("the dimension must be positive")
    return PolynomialRing(QQ, ['t'] + ['x%s' % i for i in range(1, n + 1)])


def _as_coefficients(Z, R):
    if isinstance(Z, VectorFieldId):
        return Z.coefficients(R)
    return [R(c) for c in Z]


def apply_Z_exact(Z, p, R):
    r"""
    Return `Z p` for a polynomial ``p`` of total degree at most `8`.

    INPUT:

    - ``Z`` -- a :class:`VectorFieldId` or a list of polynomial
      coefficients `c^\mu`
    - ``p`` -- a polynomial in ``R``
    - ``R`` -- the ring of :func:`minkowski_ring`

    EXAMPLES::

        sage: from eym_exterior.vector_fields import VectorFieldId, apply_Z_exact, minkowski_ring
        sage: R = minkowski_ring(1); t, x1 = R.gens()
        sage: apply_Z_exact(VectorFieldId.translation(0), t^3*x1, R)
        3*t^2*x1
        sage: apply_Z_exact(VectorFieldId.scaling(), t^9, R)
        Traceback (most recent call last):
        ...
        ValueError: polynomial degree 9 exceeds 8
    """
    p = R(p)
    if p.total_degree() > MAX_DEGREE:
        raise ValueError("polynomial degree %s exceeds %s" % (p.total_degree(), MAX_DEGREE))
    c = _as_coefficients(Z, R)
    return sum((ci * p.derivative(x) for ci, x in zip(c, R.gens()) if ci), R.zero())


def commutator_vector_fields(Z1, Z2, R):
    r"""
    Return the coefficients of the bracket `[Z_1, Z_2]`.

    The bracket of two first order operators is the first order operator
    with coefficients `Z_1(c_2^\mu) - Z_2(c_1^\mu)`.

    EXAMPLES::

        sage: from eym_exterior.vector_fields import VectorFieldId, commutator_vector_fields, minkowski_ring
        sage: R = minkowski_ring(2)
        sage: S = VectorFieldId.scaling()
        sage: commutator_vector_fields(VectorFieldId.boost(1), S, R)
        [0, 0, 0]
        sage: commutator_vector_fields(S, VectorFieldId.translation(1), R)
        [0, -1, 0]
        sage: commutator_vector_fields(VectorFieldId.translation(0), VectorFieldId.boost(2), R)
        [0, 0, 1]
    """
    c1 = _as_coefficients(Z1, R)
    c2 = _as_coefficients(Z2, R)
    return [apply_Z_exact(c1, b, R) - apply_Z_exact(c2, a, R) for a, b in zip(c1, c2)]


def box(p, R):
    r"""
    Return `\Box_m p = -\partial_t^2 p + \sum_i \partial_i^2 p`.

    EXAMPLES::

        sage: from eym_exterior.vector_fields import box, minkowski_ring
        sage: R = minkowski_ring(2); t, x1, x2 = R.gens()
        sage: box(t^2 + x1*x2 + x2^2, R)
        0
    """
    p = R(p)
    x = R.gens()
    return -p.derivative(x[0], 2) + sum(p.derivative(xi, 2) for xi in x[1:])


def lorentz_fields(n):
    """
    Return the rotations and boosts in dimension ``n``.
    """
    fields = [VectorFieldId.boost(i) for i in range(1, n + 1)]
    fields += [VectorFieldId.rotation(i, j)
               for i, j in itertools.combinations(range(1, n + 1), 2)]
    return fields


def monomials(R, degree):
    """
    Return the monomials of ``R`` of total degree at most ``degree``.
    """
    return [prod(c, R.one())
            for k in range(degree + 1)
            for c in itertools.combinations_with_replacement(R.gens(), k)]


def commutator_table_check(n=4, degree=4):
    r"""
    Verify the commutation relations of the family as exact polynomial
    identities on all monomials of degree at most ``degree``.

    Besides `[\Box_m, Z_{\alpha\beta}] = 0`, `[\Box_m, S] = 2\Box_m` and
    `[S, \partial_\mu] = -\partial_\mu` on monomials, the brackets
    `[Z_{\alpha\beta}, S] = 0` and the constancy of
    `[\partial_\mu, Z_{\alpha\beta}]` are checked on the coefficients.

    OUTPUT: a JSON-ready dictionary with the number of checks, the list of
    failures (identity, field, monomial and nonzero residual) and ``ok``.

    EXAMPLES::

        sage: from eym_exterior.vector_fields import commutator_table_check
        sage: R = commutator_table_check(n=3, degree=4)
        sage: R['ok'], R['failures'], R['monomials']
        (True, [], 70)
        sage: R['checks']
        800
    """
    n = int(n)
    R = minkowski_ring(n)
    S = VectorFieldId.scaling()
    lorentz = lorentz_fields(n)
    translations = [VectorFieldId.translation(mu) for mu in range(n + 1)]
    failures = []
    checks = 0

    def record(identity, field, monomial, residual):
        if residual:
            failures.append({'identity': identity, 'field': repr(field),
                             'monomial': str(monomial), 'residual': str(residual)})

    mons = monomials(R, degree)
    for p in mons:
        bp = box(p, R)
        for Z in lorentz:
            record('[box, Z] = 0', Z, p, box(apply_Z_exact(Z, p, R), R) - apply_Z_exact(Z, bp, R))
        record('[box, S] = 2 box', S, p,
               box(apply_Z_exact(S, p, R), R) - apply_Z_exact(S, bp, R) - 2 * bp)
        for T in translations:
            record('[S, d] = -d', T, p,
                   apply_Z_exact(S, apply_Z_exact(T, p, R), R)
                   - apply_Z_exact(T, apply_Z_exact(S, p, R), R)
                   + apply_Z_exact(T, p, R))
        checks += len(lorentz) + 1 + len(translations)
    for Z in lorentz:
        c = commutator_vector_fields(Z, S, R)
        bad = [ci for ci in c if ci]
        record('[Z, S] = 0', Z, 1, bad[0] if bad else 0)
        for T in translations:
            c = commutator_vector_fields(T, Z, R)
            bad = [ci for ci in c if ci.total_degree() > 0]
            record('[d, Z] is a translation', (T, Z), 1, bad[0] if bad else 0)
        checks += 1 + len(translations)
    verbose("commutator table: %s checks, %s failures" % (checks, len(failures)), level=1)
    return {'n': n, 'degree': int(degree), 'monomials': len(mons), 'checks': checks,
            'failures': failures, 'ok': not failures}
