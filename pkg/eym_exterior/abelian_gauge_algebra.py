r"""
Abelian gauge algebra
---------------------

The one-dimensional abelian algebra `\mathbb{R}`. All brackets vanish, so
the Yang-Mills equations reduce to the Maxwell equations.

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

import numpy as np

from eym_exterior.abstract_gauge_algebra import AbstractGaugeAlgebra
from sage.categories.sets_cat import Sets


class AbelianGaugeAlgebra(AbstractGaugeAlgebra):
    r"""
    The abelian gauge algebra of dimension 1.

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: G = GaugeAlgebra('abelian')
        sage: e1, = G.basis()
        sage: e1.bracket(e1 * 3)
        (0.0)
        sage: (e1 * 3).norm()
        3.0
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
        self._constants = np.zeros((1, 1, 1))
        self._constants.setflags(write=False)

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return "Abelian gauge algebra of dimension 1"

    def key(self):
        """
        Return ``'abelian'``.
        """
        return 'abelian'

    def structure_constants(self):
        """
        Return the vanishing structure constants.
        """
        return self._constants
