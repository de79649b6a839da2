r"""
Abstract class for gauge Lie algebras.

A gauge algebra is a real Lie algebra `\mathfrak{g}` with a fixed basis
`e_1, \dots, e_d` that is orthonormal for an ad-invariant inner product.
Concrete algebras only provide their structure constants
`[e_a, e_b] = \sum_c C_{abc} e_c`; everything else, including the
vectorized bracket used on grids, is derived here.

AUTHORS:

- eym_exterior developers (2026-10-19): initial version
"""
# *****************************************************************************
#  Copyright (C) 2026 eym_exterior developers
#
#  Distributed under the terms of the GNU General Public License (GPL)
#
#  The full text of the GPL is available at:
#
#                  https://www.gnu.org/licenses/
# ******************************************************************************

import numpy as np

from sage.misc.abstract_method import abstract_method
from sage.misc.cachefunc import cached_method
from sage.structure.unique_representation import UniqueRepresentation
from sage.structure.parent import Parent
from sage.categories.sets_cat import Sets
from eym_exterior.lie_value import LieValue


class AbstractGaugeAlgebra(UniqueRepresentation, Parent):
    r"""
    Abstract class for gauge Lie algebras.

    .. SEEALSO::

        :func:`eym_exterior.gauge_algebra.GaugeAlgebra`
    """

    """
    List of all possible keys
    """
    keys = ['abelian', 'su2']

    Element = LieValue

    def __init__(self, category=None):
        if category is None:
            category = Sets()
        Parent.__init__(self, category=category)

    @abstract_method
    def structure_constants(self):
        r"""
        Return the array `C_{abc}` with `[e_a, e_b] = \sum_c C_{abc} e_c`.
        """
        pass

    @abstract_method
    def key(self):
        """
        Return the configuration token of ``self``.
        """
        pass

    def is_valid(self) -> bool:
        r"""
        Return whether the structure constants define a Lie algebra.

        Checks antisymmetry `C_{abc} = -C_{bac}` and the Jacobi identity on
        all basis triples.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: GaugeAlgebra('su2').is_valid()
            True
        """
        C = self.structure_constants()
        if not np.array_equal(C, -C.transpose(1, 0, 2)):
            return False
        return self.jacobi_check() == 0

    @cached_method
    def dimension(self):
        """
        Return the dimension of ``self``.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: GaugeAlgebra('abelian').dimension(), GaugeAlgebra('su2').dimension()
            (1, 3)
        """
        return int(self.structure_constants().shape[0])

    def element(self, coeffs):
        """
        Return the element of ``self`` with coefficients ``coeffs``.
        """
        return self.element_class(self, coeffs)

    def _element_constructor_(self, coeffs):
        return self.element(coeffs)

    def zero(self):
        """
        Return the zero of ``self``.
        """
        return self.element([0] * self.dimension())

    @cached_method
    def basis(self):
        """
        Return the orthonormal basis of ``self`` as a tuple.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: GaugeAlgebra('su2').basis()
            ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
        """
        d = self.dimension()
        return tuple(self.element([1 if i == j else 0 for j in range(d)])
                     for i in range(d))

    def bracket(self, x, y):
        r"""
        Return `[x, y]`.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: G = GaugeAlgebra('su2')
            sage: e1, e2, e3 = G.basis()
            sage: G.bracket(e2, e1)
            (0.0, 0.0, -1.0)
            sage: x = e1 + e2 * 3 - e3
            sage: G.bracket(x, x)
            (0.0, 0.0, 0.0)
        """
        return self.element(self.bracket_arrays(x.to_array(), y.to_array()))

    def inner(self, x, y):
        r"""
        Return the inner product `\langle x, y \rangle` as a float.
        """
        return float(np.dot(x.to_array(), y.to_array()))

    def norm(self, x):
        r"""
        Return `|x| = \sqrt{\langle x, x \rangle}`.
        """
        return x.norm()

    def bracket_arrays(self, x, y):
        r"""
        Return the bracket of two arrays of coefficient vectors.

        INPUT:

        - ``x``, ``y`` -- arrays of shape ``(..., d)`` that broadcast
          together, where ``d`` is the dimension of ``self``

        EXAMPLES::

            sage: import numpy as np
            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: G = GaugeAlgebra('su2')
            sage: x = np.array([[1., 0, 0], [0, 1, 0]])
            sage: y = np.array([0., 1, 0])
            sage: G.bracket_arrays(x, y).tolist()
            [[0.0, 0.0, 1.0], [0.0, 0.0, 0.0]]
        """
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        d = self.dimension()
        if x.shape[-1] != d or y.shape[-1] != d:
            raise TypeError("values belong to different algebras")
        x, y = np.broadcast_arrays(x, y)
        return np.einsum('abc,...a,...b->...c', self.structure_constants(), x, y)

    def inner_arrays(self, x, y):
        """
        Return the inner products of two arrays of coefficient vectors,
        contracted along the last axis.
        """
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape[-1] != self.dimension() or y.shape[-1] != self.dimension():
            raise TypeError("values belong to different algebras")
        return np.sum(x * y, axis=-1)

    def jacobi_check(self):
        r"""
        Return the largest Jacobi residual over all basis triples.

        The residual of `(a, b, c)` is the max-norm of
        `[[e_a, e_b], e_c] + [[e_b, e_c], e_a] + [[e_c, e_a], e_b]`.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: GaugeAlgebra('su2').jacobi_check()
            0.0
        """
        E = np.eye(self.dimension())
        worst = 0.0
        for a in E:
            for b in E:
                for c in E:
                    r = (self.bracket_arrays(self.bracket_arrays(a, b), c)
                         + self.bracket_arrays(self.bracket_arrays(b, c), a)
                         + self.bracket_arrays(self.bracket_arrays(c, a), b))
                    worst = max(worst, float(np.max(np.abs(r))))
        return worst

    def ad_invariance_check(self):
        r"""
        Return the largest value of
        `|\langle [z, x], y \rangle + \langle x, [z, y] \rangle|` over all
        basis triples.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: GaugeAlgebra('su2').ad_invariance_check()
            0.0
            sage: GaugeAlgebra('abelian').ad_invariance_check()
            0.0
        """
        E = np.eye(self.dimension())
        worst = 0.0
        for z in E:
            for x in E:
                for y in E:
                    r = (self.inner_arrays(self.bracket_arrays(z, x), y)
                         + self.inner_arrays(x, self.bracket_arrays(z, y)))
                    worst = max(worst, abs(float(r)))
        return worst

    def random_arrays(self, rng, shape, scale=1.0):
        """
        Return normally distributed coefficient arrays of shape
        ``shape + (d,)`` drawn from the numpy generator ``rng``.
        """
        return scale * rng.standard_normal(tuple(shape) + (self.dimension(),))
