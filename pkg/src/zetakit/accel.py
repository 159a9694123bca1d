"""Acceleration of alternating series.

The workhorse is the Chebyshev-polynomial scheme of Cohen, Rodriguez Villegas
and Zagier ("Convergence acceleration of alternating series", Exp. Math. 9,
2000).  It turns n terms of a series whose terms carry a strict (-1)^k
envelope into roughly 0.766*n correct digits, and in practice it tolerates
slowly varying complex envelopes as well.
"""
from __future__ import annotations

import math

_LN_ACCEL_BASE = math.log(3.0 + math.sqrt(8.0))  # ~1.7627, digits per term


def alternating_sum(terms) -> complex:
    """Sum an alternating series from its leading terms.

    terms: the actual signed terms t_0, t_1, ... with t_k ~ (-1)^k * a_k,
    a_k slowly varying (real or complex).  Returns the accelerated sum.
    """
    terms = list(terms)
    n = len(terms)
    if n == 0:
        return 0j
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    total = 0j
    for k in range(n):
        c = b - c
        # fold out the sign so the scheme sees the positive envelope
        total += c * ((-1) ** k * terms[k])
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0))
    return total / d


def alternating_sum_with_estimate(terms) -> tuple[complex, float]:
    """alternating_sum plus a crude error estimate.

    The estimate is the change when the last few terms are dropped; callers
    scale it by their own safety factor.
    """
    terms = list(terms)
    full = alternating_sum(terms)
    if len(terms) <= 8:
        return full, abs(full) * 1e-3
    trimmed = alternating_sum(terms[:-3])
    return full, abs(full - trimmed)


def terms_for_tolerance(tol: float, extra_digits: float = 0.0) -> int:
    """Number of terms so the scheme's theoretical error (3+sqrt8)^-n
    beats tol, with a safety pad."""
    digits = -math.log10(max(tol, 1e-300)) + extra_digits
    return max(8, math.ceil(digits * math.log(10.0) / _LN_ACCEL_BASE) + 6)
