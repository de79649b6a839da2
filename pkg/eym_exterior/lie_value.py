r"""
Lie algebra values

A :class:`LieValue` is an element of the gauge Lie algebra `\mathfrak{g}`
stored as its real coefficients on the fixed orthonormal basis of the
parent algebra.

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

from sage.structure.element import Element


class LieValue(Element):
    r"""
    An element of a gauge Lie algebra, as a coefficient vector.

    INPUT:

    - ``parent`` -- the algebra, usually built by
      :func:`eym_exterior.gauge_algebra.GaugeAlgebra`
    - ``coeffs`` -- iterable of finite reals, one per basis element; a
      :class:`LieValue` of the same algebra is also accepted

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: G = GaugeAlgebra('su2')
        sage: e1, e2, e3 = G.basis()
        sage: e1
        (1.0, 0.0, 0.0)
        sage: e1.bracket(e2) == e3
        True
        sage: e1.inner(e1), e1.inner(e2)
        (1.0, 0.0)
        sage: x = e1 + e2 * 2
        sage: x.inner(x)
        5.0
        sage: -e3
        (0.0, 0.0, -1.0)

    Values have a fixed length and finite entries::

        sage: G.element([1, 2])
        Traceback (most recent call last):
        ...
        ValueError: expected 3 coefficients, got 2
        sage: G.element([1, float('inf'), 0])
        Traceback (most recent call last):
        ...
        ValueError: coefficients must be finite

    .. SEEALSO::

        - :func:`eym_exterior.gauge_algebra.GaugeAlgebra`
        - :class:`eym_exterior.abstract_gauge_algebra.AbstractGaugeAlgebra`
    """

    def __init__(self, parent, coeffs):
        """
        Initialize ``self``.
        """
        if isinstance(coeffs, LieValue):
            coeffs = coeffs.coefficients()
        values = tuple(float(c) for c in coeffs)
        if len(values) != parent.dimension():
            raise ValueError("expected %s coefficients, got %s"
                             % (parent.dimension(), len(values)))
        if not all(math.isfinite(c) for c in values):
            raise ValueError("coefficients must be finite")
        # -0.0 is stored as 0.0
        self._coeffs = tuple(c + 0.0 for c in values)
        Element.__init__(self, parent)

    def coefficients(self):
        """
        Return the coefficients of ``self`` as a tuple of floats.
        """
        return self._coeffs

    def to_array(self):
        """
        Return the coefficients of ``self`` as a numpy array.
        """
        return np.array(self._coeffs, dtype=float)

    def _check_same_algebra(self, other):
        if not isinstance(other, LieValue) or other.parent() is not self.parent():
            raise TypeError("values belong to different algebras")

    def __hash__(self):
        """
        Return the hash of ``self``.
        """
        return hash((self.parent(), self._coeffs))

    def __eq__(self, other):
        """
        Return whether two values are equal coefficientwise.
        """
        if isinstance(other, LieValue):
            return other.parent() is self.parent() and self._coeffs == other._coeffs
        return False

    def __ne__(self, other):
        """
        Return whether two values differ.
        """
        return not (self == other)

    def __bool__(self):
        """
        Return whether ``self`` is nonzero.
        """
        return any(c != 0 for c in self._coeffs)

    def __add__(self, other):
        """
        Return the sum of two values.
        """
        self._check_same_algebra(other)
        return self.parent().element([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other):
        """
        Return the difference of two values.
        """
        self._check_same_algebra(other)
        return self.parent().element([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self):
        """
        Return the opposite value.
        """
        return self.parent().element([-a for a in self._coeffs])

    def __mul__(self, scalar):
        """
        Return ``self`` scaled by a real number.
        """
        if isinstance(scalar, LieValue):
            raise TypeError("use bracket() or inner() to combine two values")
        c = float(scalar)
        return self.parent().element([c * a for a in self._coeffs])

    __rmul__ = __mul__

    def _repr_(self):
        """
        Return a string of the coefficient vector.
        """
        return "(" + ", ".join(repr(c) for c in self._coeffs) + ")"

    def bracket(self, other):
        r"""
        Return the Lie bracket `[` ``self`` `,` ``other`` `]`.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: e1, = GaugeAlgebra('abelian').basis()
            sage: e1.bracket(e1)
            (0.0)
        """
        self._check_same_algebra(other)
        return self.parent().bracket(self, other)

    def inner(self, other):
        r"""
        Return the ad-invariant inner product `\langle` ``self`` `,`
        ``other`` `\rangle`.
        """
        self._check_same_algebra(other)
        return self.parent().inner(self, other)

    def norm(self):
        r"""
        Return `\sqrt{\langle x, x \rangle}`.
        """
        return math.sqrt(self.inner(self))
