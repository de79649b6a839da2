r"""
Gauge algebras construction

Theory
======

The gauge potential `A` and its curvature take values in the Lie algebra
`\mathfrak{g}` of a compact Lie group. Two algebras are built in:

    - the abelian algebra `\mathbb{R}` (Maxwell baselines), of dimension 1
    - `\mathfrak{su}(2)`, the smallest non-abelian compact case, with
      `[e_a, e_b] = \varepsilon_{abc} e_c`

In both cases the inner product is the negative Killing form rescaled so
that the basis is orthonormal; it is ad-invariant.

Constructing gauge algebras
===========================

Call ``GaugeAlgebra(key)`` with the configuration token ``'abelian'`` or
``'su2'``. Algebras are unique: two calls with the same key return the same
object, so values built from either can be combined.

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

from eym_exterior.abstract_gauge_algebra import AbstractGaugeAlgebra


def GaugeAlgebra(key='su2'):
    r"""
    Construct a gauge Lie algebra.

    INPUT:

    - ``key`` -- (default: ``'su2'``) the configuration token of the
      algebra. It can be one of the following:

      + ``'abelian'`` - the one-dimensional abelian algebra
      + ``'su2'`` - the algebra `\mathfrak{su}(2)`

    EXAMPLES::

        sage: from eym_exterior.gauge_algebra import GaugeAlgebra
        sage: GaugeAlgebra('abelian')
        Abelian gauge algebra of dimension 1
        sage: G = GaugeAlgebra('su2'); G
        Gauge algebra su(2)
        sage: G is GaugeAlgebra()
        True
        sage: GaugeAlgebra('su3')
        Traceback (most recent call last):
        ...
        ValueError: invalid type key

    Values of different algebras cannot be combined::

        sage: a, = GaugeAlgebra('abelian').basis()
        sage: a.inner(G.basis()[0])
        Traceback (most recent call last):
        ...
        TypeError: values belong to different algebras

    OUTPUT:

    A gauge algebra whose structure is determined by ``key``.

    .. SEEALSO::

        :class:`eym_exterior.abstract_gauge_algebra.AbstractGaugeAlgebra`
    """
    G = None

    if key not in AbstractGaugeAlgebra.keys:
        raise ValueError("invalid type key")

    if key == 'abelian':
        from eym_exterior.abelian_gauge_algebra import AbelianGaugeAlgebra
        G = AbelianGaugeAlgebra()
    elif key == 'su2':
        from eym_exterior.su2_gauge_algebra import SU2GaugeAlgebra
        G = SU2GaugeAlgebra()

    if G is None:
        raise NotImplementedError(
            f"Gauge algebra of type {key} is not implemented")

    if G.is_valid():
        return G

    raise ValueError("Gauge algebra is not valid")
