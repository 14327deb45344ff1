"""Shared scalar kernels, written once so every module agrees on numerics.

The expressions here are short but easy to get wrong in floating point:
naive forms lose all significant digits either for small arguments
(oscillation bracket) or for large squeeze magnitudes (window half-angle,
windowed phase weight).  Each function below uses a cancellation-free
rewrite that is exact over the full supported range.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import spherical_jn


def oscillation_bracket(x):
    """(x^2 - 3)*sin(x) + 3*x*cos(x), stable for all x >= 0.

    Evaluated as -x^3 * j2(x) with j2 the spherical Bessel function, which
    avoids the cancellation of the trigonometric form below x ~ 0.3 (the
    bracket opens as -x^5/15 there).  Accepts scalars or arrays.
    """
    x = np.asarray(x, dtype=float)
    out = -(x**3) * spherical_jn(2, x)
    return float(out) if out.ndim == 0 else out


def j2_over_x(x):
    """j2(x)/x with j2 the spherical Bessel function; -> x/15 as x -> 0."""
    x = np.asarray(x, dtype=float)
    out = spherical_jn(2, x) / x
    return float(out) if out.ndim == 0 else out


def window_half_angle(r: float) -> float:
    """Half-angle arccos(tanh r) of the negative-modulation phase window.

    Uses the exact identity arccos(tanh r) = 2*arctan(e^{-r}); the arccos
    form loses digits once tanh r approaches 1 (r > 15 or so), while the
    arctan form is uniformly accurate and decays smoothly as 2 e^{-r}.
    """
    return 2.0 * math.atan(math.exp(-r))


def phase_weight(r: float, phase: float) -> float:
    """eta*(mu*cos(phase) + eta) for mu = cosh r, eta = sinh r.

    Written as the exact rearrangement

        phase_weight = phase_weight_min(r) + sinh(2r)*cos(phase/2)^2

    because the direct form subtracts two O(e^{2r}) numbers near
    phase = pi and returns garbage already for r > 18.  The rewrite keeps
    full precision at the minimum for every admissible r.
    """
    c = math.cos(0.5 * phase)
    return phase_weight_min(r) + math.sinh(2.0 * r) * c * c


def phase_weight_min(r: float) -> float:
    """Minimum of the phase weight over phase: -(1 - e^{-2r})/2."""
    return 0.5 * math.expm1(-2.0 * r)


def phase_weight_max(r: float) -> float:
    """Maximum of the phase weight over phase: (e^{2r} - 1)/2."""
    return 0.5 * math.expm1(2.0 * r)


# Coefficients 4k/((2k-1)(2k+1)) of the small-u expansion of
# ((1-u^2)*atan(u) - u)/u^3, u = e^{-r}; eight terms reach machine
# precision for u <= 0.1.
_WINDOW_SERIES = tuple(
    4.0 * k / ((2.0 * k - 1.0) * (2.0 * k + 1.0)) for k in range(1, 9)
)


def windowed_phase_weight(r: float) -> float:
    """Average of the phase weight over the negative half of its window.

    Equals sinh(r)^2 - sinh(r)/(2*arctan(e^{-r})), but that difference
    cancels catastrophically for large r (both terms grow like e^{2r}/4
    while the result stays in (-1/3, 0)).  With u = e^{-r} and
    a = arctan(u) the exact regrouping

        result = (1 - u^2) * S(u) * u / (4a),
        S(u)   = ((1 - u^2)*a - u) / u^3,

    is benign: S is evaluated directly for u > 0.1 and by its series
    -4/3 + (8/15)u^2 - ... below, so the result is accurate to machine
    precision for every r in [0, SQUEEZE_CAP].  Returns 0 at r = 0 and
    tends to -1/3 as r -> infinity.
    """
    if r == 0.0:
        return 0.0
    u = math.exp(-r)
    a = math.atan(u)
    if u > 0.1:
        s = ((1.0 - u * u) * a - u) / u**3
    else:
        usq = u * u
        s = 0.0
        for coeff in reversed(_WINDOW_SERIES[1:]):
            s = usq * (coeff - s)
        s = -(_WINDOW_SERIES[0] - s)
    return (1.0 - u * u) * s * u / (4.0 * a)
