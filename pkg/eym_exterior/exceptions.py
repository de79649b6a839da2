r"""
Exceptions raised by the exterior energy laboratory.

Input and invariant violations raise :class:`ValueError` with a message, as
everywhere in Sage. The classes below cover the remaining cases: numerical
failures during an evolution (which carry the last good time), configuration
errors (which carry the offending field path) and failed verifications
(which carry the offending sample).

EXAMPLES::

    sage: from eym_exterior.exceptions import DomainExhausted, NumericalFailure
    sage: err = DomainExhausted("exterior region leaves the grid", time=12.5)
    sage: isinstance(err, NumericalFailure), isinstance(err, ArithmeticError)
    (True, True)
    sage: err.time
    12.5

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


class NumericalFailure(ArithmeticError):
    r"""
    An evolution or a quadrature could not continue.

    INPUT:

    - ``message`` -- description of the failure
    - ``time`` -- (default: ``None``) last time at which the state was good

    EXAMPLES::

        sage: from eym_exterior.exceptions import NumericalFailure
        sage: try:
        ....:     raise NumericalFailure("solution blew up", time=3.0)
        ....: except ArithmeticError as err:
        ....:     print(err, err.time)
        solution blew up 3.0
    """
    def __init__(self, message, time=None):
        """
        Initialize ``self``.
        """
        ArithmeticError.__init__(self, message)
        self.time = None if time is None else float(time)


class DomainExhausted(NumericalFailure):
    """
    The exterior region `r - t \\geq q_0` is no longer resolved by the grid.
    """


class MetricDegenerate(NumericalFailure):
    """
    The metric is singular or `g^{tt}` is not safely negative.
    """


class NonFiniteState(NumericalFailure):
    """
    A NaN or an infinity appeared in the evolved state.
    """


class ConfigError(ValueError):
    r"""
    A run configuration violates its schema or its invariants.

    INPUT:

    - ``message`` -- description of the violation
    - ``path`` -- (default: ``None``) dotted path of the offending field

    EXAMPLES::

        sage: from eym_exterior.exceptions import ConfigError
        sage: err = ConfigError("unknown key", path="hardy.b")
        sage: err.path
        'hardy.b'
        sage: str(err)
        'hardy.b: unknown key'
    """
    def __init__(self, message, path=None):
        """
        Initialize ``self``.
        """
        if path is not None:
            message = "%s: %s" % (path, message)
        ValueError.__init__(self, message)
        self.path = path


class VerificationFailure(AssertionError):
    r"""
    A verified bound or identity failed.

    INPUT:

    - ``message`` -- description of the failure
    - ``sample`` -- (default: ``None``) the offending sample
    """
    def __init__(self, message, sample=None):
        """
        Initialize ``self``.
        """
        AssertionError.__init__(self, message)
        self.sample = sample
