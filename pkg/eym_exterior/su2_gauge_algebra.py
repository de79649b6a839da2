r"""
The gauge algebra su(2)
-----------------------

The three-dimensional algebra `\mathfrak{su}(2)` in the basis with
`[e_a, e_b] = \varepsilon_{abc} e_c`, orthonormal for the rescaled negative
Killing form.

AUTHORS:

- eym_exterior developers (2026-10-19): initial version
"""

##############################################################################
#       Copyright (C) 2026 eym_exterior developers
#
#  Distributed under the terms of the GNU General Public License (GPL)
#
#  The full text of the GPL is available at:
#
#                  http://www.gnu.org/licenses/
##############################################################################

import itertools

import numpy as np

from eym_exterior.abstract_gauge_algebra import AbstractGaugeAlgebra
from sage.categories.sets_cat import Sets
from sage.combinat.permutation import Permutation


class SU2GaugeAlgebra(AbstractGaugeAlgebra):
    r"""
    The gauge algebra `\mathfrak{su}(2)`.

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: G = GaugeAlgebra('su2')
        sage: e1, e2, e3 = G.basis()
        sage: e1.bracket(e2), e2.bracket(e3), e3.bracket(e1)
        ((0.0, 0.0, 1.0), (1.0, 0.0, 0.0), (0.0, 1.0, 0.0))
        sage: e1.bracket(e2).inner(e3) + e2.inner(e1.bracket(e3))
        0.0

    The structure constants agree with the Lie algebra Sage builds from
    the same relations::

        sage: L = LieAlgebra(QQ, {('x','y'): {'z': 1}, ('y','z'): {'x': 1},
        ....:                     ('z','x'): {'y': 1}})
        sage: X = L.gens()
        sage: C = G.structure_constants()
        sage: all(L.bracket(X[a], X[b]) == sum(QQ(C[a, b, c]) * X[c] for c in range(3))
        ....:     for a in range(3) for b in range(3))
        True
    """

    @staticmethod
    def __classcall__(cls, category=None):
        """
        Normalize arguments and set class.
        """
        if category is None:
            category = Sets()
        return super().__classcall__(cls, category=category)

    def __init__(self, category=None):
        """
        Initialize ``self``.
        """
        AbstractGaugeAlgebra.__init__(self, category=category)
        C = np.zeros((3, 3, 3))
        for p in itertools.permutations(range(3)):
            C[p] = Permutation([i + 1 for i in p]).sign()
        C.setflags(write=False)
        self._constants = C

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return "Gauge algebra su(2)"

    def key(self):
        """
        Return ``'su2'``.
        """
        return 'su2'

    def structure_constants(self):
        r"""
        Return the Levi-Civita symbol `\varepsilon_{abc}`.

        EXAMPLES::

            sage: from eym_exterior.gauge_algebra import GaugeAlgebra
            sage: C = GaugeAlgebra('su2').structure_constants()
            sage: float(C[0, 1, 2]), float(C[1, 0, 2]), float(C[0, 0, 2])
            (1.0, -1.0, 0.0)
        """
        return self._constants
