r"""
Exterior weights

Theory
======

All weighted estimates in the exterior region are expressed in terms of the
null coordinate `q = r - t` and three weight functions. For `\gamma > 0` and
`\mu < 0` let

.. MATH::

    w(q) = \begin{cases} (1+|q|)^{1+2\gamma} & q > 0, \\ 1 & q < 0,
    \end{cases}
    \qquad
    \widehat{w}(q) = \begin{cases} (1+q)^{1+2\gamma} & q > 0, \\
    (1-q)^{2\mu} & q < 0, \end{cases}

and `\widetilde{w} = \widehat{w} + w`. The weight `\widehat{w}` is built so
that its derivative is positive on both sides of the light cone; this is the
sign that makes the tangential space-time integral appear with a good sign
in the energy estimate. The weights are equivalent in the sense that

.. MATH::

    w \leq \widetilde{w} \leq 2w, \qquad
    \widehat{w}' \leq \widetilde{w}' \leq 2\widehat{w}', \qquad
    \min(1+2\gamma, -2\mu) \leq \frac{\widehat{w}'(q)(1+|q|)}{\widehat{w}(q)}
    \leq \max(1+2\gamma, -2\mu).

At `q = 0` the `q < 0` branch is used. Values of both branches coincide
there; derivatives jump, and the one-sided value of the `q < 0` branch is
the one returned.

The growth exponent `\delta` is carried for completeness and pinned to `0`.

EXAMPLES::

    sage: from eym_exterior.weights import WeightParams, eval_weights
    sage: P = WeightParams(gamma=0.5, mu=-0.25); P
    Weight parameters (gamma=0.5, mu=-0.25, q0=0.0, delta=0.0, lambda=0.5)
    sage: eval_weights(1, P)
    Weights at q=1.0: w=4.0, w_hat=4.0, w_hat'=4.0, w_tilde=8.0, w_tilde'=8.0
    sage: eval_weights(-3, P)
    Weights at q=-3.0: w=1.0, w_hat=0.5, w_hat'=0.0625, w_tilde=1.5, w_tilde'=0.0625

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

import math

import numpy as np

from sage.structure.sage_object import SageObject
from sage.structure.unique_representation import UniqueRepresentation
from eym_exterior.exceptions import VerificationFailure


class WeightParams(UniqueRepresentation, SageObject):
    r"""
    Exponents and cutoff governing every weight and estimate.

    INPUT:

    - ``gamma`` -- (default: ``0.5``) positive exponent of `w`
    - ``mu`` -- (default: ``-0.25``) negative exponent of `\widehat{w}`
      inside the light cone
    - ``q0`` -- (default: ``0.0``) cutoff of the exterior region
      `q \geq q_0`
    - ``delta`` -- (default: ``0.0``) growth exponent, must be `0`
    - ``lam`` -- (default: ``0.5``) Grönwall exponent in `(0, 1/2]`

    EXAMPLES::

        sage: from eym_exterior.weights import WeightParams
        sage: WeightParams(gamma=1/2) is WeightParams(gamma=0.5)
        True
        sage: WeightParams(gamma=-1)
        Traceback (most recent call last):
        ...
        ValueError: gamma must be positive
        sage: WeightParams(mu=0)
        Traceback (most recent call last):
        ...
        ValueError: mu must be negative
        sage: WeightParams(lam=0.75)
        Traceback (most recent call last):
        ...
        ValueError: lambda must lie in (0, 1/2]
        sage: WeightParams(delta=0.1)
        Traceback (most recent call last):
        ...
        ValueError: delta is pinned to 0
    """

    @staticmethod
    def __classcall__(cls, gamma=0.5, mu=-0.25, q0=0.0, delta=0.0, lam=0.5):
        """
        Normalize arguments and set class.
        """
        return super().__classcall__(cls, float(gamma), float(mu), float(q0),
                                     float(delta), float(lam))

    def __init__(self, gamma, mu, q0, delta, lam):
        """
        Initialize ``self``.
        """
        self.gamma = gamma
        self.mu = mu
        self.q0 = q0
        self.delta = delta
        self.lam = lam
        self.is_valid()

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Weight parameters (gamma=%r, mu=%r, q0=%r, delta=%r, lambda=%r)"
                % (self.gamma, self.mu, self.q0, self.delta, self.lam))

    def is_valid(self) -> bool:
        """
        Return whether the parameters satisfy their invariants.

        Raises a ``ValueError`` naming the first violated invariant.
        """
        for name in ('gamma', 'mu', 'q0', 'delta', 'lam'):
            if not math.isfinite(getattr(self, name)):
                raise ValueError("%s must be finite" % name)
        if not self.gamma > 0:
            raise ValueError("gamma must be positive")
        if not self.mu < 0:
            raise ValueError("mu must be negative")
        if not 0 < self.lam <= 0.5:
            raise ValueError("lambda must lie in (0, 1/2]")
        if self.delta != 0:
            raise ValueError("delta is pinned to 0")
        return True

    def band(self):
        r"""
        Return the bounds of `\widehat{w}'(q)(1+|q|)/\widehat{w}(q)`.

        EXAMPLES::

            sage: from eym_exterior.weights import WeightParams
            sage: WeightParams(gamma=0.5, mu=-0.25).band()
            (0.5, 2.0)
        """
        a = 1 + 2 * self.gamma
        b = -2 * self.mu
        return (min(a, b), max(a, b))


class WeightSample(SageObject):
    r"""
    The five weight values at one point `q`.

    The invariant `\widetilde{w} = \widehat{w} + w` holds exactly, since
    ``w_tilde`` is computed as that sum.
    """
    def __init__(self, q, w, w_hat, w_hat_prime, w_tilde_prime):
        """
        Initialize ``self``.
        """
        self.q = q
        self.w = w
        self.w_hat = w_hat
        self.w_hat_prime = w_hat_prime
        self.w_tilde = w_hat + w
        self.w_tilde_prime = w_tilde_prime

    def _repr_(self) -> str:
        """
        Return a string representation of ``self``.
        """
        return ("Weights at q=%r: w=%r, w_hat=%r, w_hat'=%r, w_tilde=%r, w_tilde'=%r"
                % (self.q, self.w, self.w_hat, self.w_hat_prime,
                   self.w_tilde, self.w_tilde_prime))

    def as_dict(self):
        """
        Return the sample as a dictionary of floats.
        """
        return {'q': self.q, 'w': self.w, 'w_hat': self.w_hat,
                'w_hat_prime': self.w_hat_prime, 'w_tilde': self.w_tilde,
                'w_tilde_prime': self.w_tilde_prime}


def _check_point(q):
    q = float(q)
    if not math.isfinite(q):
        raise ValueError("q must be finite, got %r" % q)
    return q


def eval_weights(q, params):
    r"""
    Evaluate `w`, `\widehat{w}`, `\widehat{w}'`, `\widetilde{w}` and
    `\widetilde{w}'` at ``q``.

    INPUT:

    - ``q`` -- finite real null coordinate
    - ``params`` -- a :class:`WeightParams`

    OUTPUT: a :class:`WeightSample`

    EXAMPLES::

        sage: from eym_exterior.weights import WeightParams, eval_weights
        sage: P = WeightParams(gamma=0.5, mu=-0.25)
        sage: eval_weights(0, P)
        Weights at q=0.0: w=1.0, w_hat=1.0, w_hat'=0.5, w_tilde=2.0, w_tilde'=0.5
        sage: eval_weights(-3, WeightParams(gamma=7)).w
        1.0
        sage: eval_weights(float('nan'), P)
        Traceback (most recent call last):
        ...
        ValueError: q must be finite, got nan
    """
    q = _check_point(q)
    gamma, mu = params.gamma, params.mu
    if q > 0:
        w = (1 + q) ** (1 + 2 * gamma)
        w_hat_prime = (1 + 2 * gamma) * (1 + q) ** (2 * gamma)
        return WeightSample(q, w, w, w_hat_prime, 2 * w_hat_prime)
    w_hat = (1 - q) ** (2 * mu)
    w_hat_prime = -2 * mu * (1 - q) ** (2 * mu - 1)
    return WeightSample(q, 1.0, w_hat, w_hat_prime, w_hat_prime)


def w_prime(q, params):
    r"""
    Return the derivative `w'(q)`, which vanishes for `q \leq 0`.

    EXAMPLES::

        sage: from eym_exterior.weights import WeightParams, w_prime
        sage: w_prime(1, WeightParams(gamma=0.5))
        4.0
        sage: w_prime(-2, WeightParams(gamma=0.5))
        0.0
    """
    q = _check_point(q)
    if q > 0:
        return (1 + 2 * params.gamma) * (1 + q) ** (2 * params.gamma)
    return 0.0


def weight_arrays(q, params):
    r"""
    Vectorized weights on an array of null coordinates.

    OUTPUT: a dictionary with keys ``'w'``, ``'w_prime'``, ``'w_hat'``,
    ``'w_hat_prime'``, ``'w_tilde'``, ``'w_tilde_prime'`` whose values are
    arrays of the shape of ``q``.

    EXAMPLES::

        sage: import numpy as np
        sage: from eym_exterior.weights import WeightParams, eval_weights, weight_arrays
        sage: P = WeightParams(gamma=0.3, mu=-0.4)
        sage: qs = np.linspace(-5, 5, 41)
        sage: W = weight_arrays(qs, P)
        sage: all(abs(W['w_tilde'][i] - eval_weights(q, P).w_tilde) < 1e-13
        ....:     for i, q in enumerate(qs))
        True
    """
    q = np.asarray(q, dtype=float)
    if not np.all(np.isfinite(q)):
        raise ValueError("q must be finite")
    gamma, mu = params.gamma, params.mu
    aq = 1 + np.abs(q)
    outside = q > 0
    w = np.where(outside, aq ** (1 + 2 * gamma), 1.0)
    w_p = np.where(outside, (1 + 2 * gamma) * aq ** (2 * gamma), 0.0)
    w_hat = np.where(outside, w, aq ** (2 * mu))
    w_hat_p = np.where(outside, w_p, -2 * mu * aq ** (2 * mu - 1))
    return {'w': w, 'w_prime': w_p, 'w_hat': w_hat, 'w_hat_prime': w_hat_p,
            'w_tilde': w_hat + w,
            'w_tilde_prime': np.where(outside, 2 * w_hat_p, w_hat_p)}


def check_weight_equivalences(params, q_samples, rtol=1e-12):
    r"""
    Check the equivalences between `w`, `\widehat{w}` and `\widetilde{w}`
    on sample points.

    INPUT:

    - ``params`` -- a :class:`WeightParams`
    - ``q_samples`` -- nonempty iterable of finite reals
    - ``rtol`` -- (default: ``1e-12``) relative slack on the bounds

    OUTPUT:

    A dictionary with the minimum and maximum over the samples of
    `\widetilde{w}/w`, `\widetilde{w}'/\widehat{w}'` and
    `\widehat{w}'(1+|q|)/\widehat{w}`, the band limits, and the convention
    used at `q = 0`. A ``VerificationFailure`` naming the violating `q` is
    raised if a bound fails.

    EXAMPLES::

        sage: from eym_exterior.weights import WeightParams, check_weight_equivalences
        sage: P = WeightParams(gamma=0.5, mu=-0.25)
        sage: R = check_weight_equivalences(P, range(-10, 11))
        sage: R['w_tilde_over_w'], R['band']
        ((1.3015..., 2.0), (0.5, 2.0))
        sage: R['q0_convention']
        'q = 0 uses the q < 0 branch'
        sage: check_weight_equivalences(P, [-1, -2, -7.5])['w_tilde_over_w'][1] <= 2
        True
        sage: check_weight_equivalences(P, [0])['w_tilde_over_w']
        (2.0, 2.0)
        sage: check_weight_equivalences(P, [])
        Traceback (most recent call last):
        ...
        ValueError: at least one sample is needed
    """
    qs = [_check_point(q) for q in q_samples]
    if not qs:
        raise ValueError("at least one sample is needed")
    lo, hi = params.band()
    ratios = {'w_tilde_over_w': [], 'w_tilde_prime_over_w_hat_prime': [],
              'band_ratio': []}
    for q in qs:
        s = eval_weights(q, params)
        r1 = s.w_tilde / s.w
        r2 = s.w_tilde_prime / s.w_hat_prime
        r3 = s.w_hat_prime * (1 + abs(q)) / s.w_hat
        if not (1 - rtol <= r1 <= 2 * (1 + rtol)):
            raise VerificationFailure("w <= w_tilde <= 2w fails at q=%r" % q, sample=q)
        if not (1 - rtol <= r2 <= 2 * (1 + rtol)):
            raise VerificationFailure("w_hat' <= w_tilde' <= 2w_hat' fails at q=%r" % q,
                                      sample=q)
        if not (lo * (1 - rtol) <= r3 <= hi * (1 + rtol)):
            raise VerificationFailure("band bound fails at q=%r" % q, sample=q)
        ratios['w_tilde_over_w'].append(r1)
        ratios['w_tilde_prime_over_w_hat_prime'].append(r2)
        ratios['band_ratio'].append(r3)
    report = {key: (min(vals), max(vals)) for key, vals in ratios.items()}
    report['band'] = (lo, hi)
    report['samples'] = len(qs)
    report['q0_convention'] = 'q = 0 uses the q < 0 branch'
    return report
