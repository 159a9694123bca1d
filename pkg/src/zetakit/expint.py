"""Generalized exponential integral E_s(z) for complex order.

E_s(z) = integral over v in [1, inf) of v^{-s} e^{-zv}, taken on the
principal branch, for Re z >= 0, z != 0.  Three evaluation routes:

* exact closed form for integer orders s = -m <= 0,
* divergent large-|z| expansion with a smallest-term guard,
* rotated-ray integral (e^{-z}/z) int_0^inf (1 + t/z)^{-s} e^{-t} dt,
  which converges for every order and is the fallback of record.

Order-derivatives up to level 2 come from central finite differences in s,
cross-checked against the derivative of the upward order recursion.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .quadrature import integrate_decaying

_ASYMPTOTIC_CUT = 30.0


@dataclass(frozen=True)
class ExpIntRequest:
    """Validated evaluation request: order, argument, derivative level, tol."""

    order: complex
    argument: complex
    derivative_level: int = 0
    tolerance: float = 1e-10

    def __post_init__(self) -> None:
        if self.derivative_level not in (0, 1, 2):
            raise ValueError("derivative_level must be 0, 1 or 2")
        if not 1e-15 <= self.tolerance <= 1e-3:
            raise ValueError("tolerance must lie in [1e-15, 1e-3]")
        z = complex(self.argument)
        if z == 0:
            raise DomainError("argument must be nonzero")
        if z.real < 0:
            raise DomainError("argument must satisfy Re z >= 0")


def half_odd_pi(k: int) -> float:
    """pi (k + 1/2), the only arguments the series modules ever need."""
    return math.pi * (k + 0.5)


def _is_nonpositive_int(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == round(s.real)


def expint_negint(m: int, z: complex) -> complex:
    """E_{-m}(z) = m! e^{-z} z^{-m-1} sum_{j<=m} z^j / j!, exact for m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    z = complex(z)
    if z == 0:
        raise DomainError("argument must be nonzero")
    acc = 0j
    term = 1.0 + 0j
    for j in range(m + 1):
        acc += term
        term *= z / (j + 1)
    return math.factorial(m) * cmath.exp(-z) * z ** (-m - 1) * acc


def _expint_asymptotic(s: complex, z: complex, rel_tol: float):
    """Large-|z| expansion; returns None when the smallest term is too big."""
    term = 1.0 + 0j
    total = 0j
    smallest = math.inf
    for j in range(int(abs(z)) + 20):
        total += term
        nxt = term * (-(s + j) / z)
        if abs(nxt) >= abs(term):
            smallest = abs(term)
            break
        term = nxt
        if abs(term) < 0.1 * rel_tol:
            smallest = abs(term)
            break
    if smallest > 0.1 * rel_tol:
        return None
    return cmath.exp(-z) / z * total


def _expint_ray(s: complex, z: complex, tol: float) -> complex:
    # 1 + t/z keeps Re >= 1 for t >= 0, Re z >= 0, so the principal log
    # never meets the cut
    pref = cmath.exp(-z) / z
    inner_tol = min(max(tol / max(abs(pref), 1e-300), 1e-15), 1e-3)

    def f(t):
        return np.exp(-s * np.log(1.0 + t / z) - t)

    res = integrate_decaying(f, 0.0, inner_tol)
    return pref * complex(res.value)


def expint_e(s: complex, z: complex, tol: float = 1e-12) -> complex:
    """E_s(z) on the closed right half plane (z != 0), any complex order."""
    s = complex(s)
    z = complex(z)
    if z == 0:
        raise DomainError("argument must be nonzero")
    if z.real < 0:
        raise DomainError("argument must satisfy Re z >= 0")
    if _is_nonpositive_int(s):
        return expint_negint(int(-s.real), z)
    if abs(z) >= _ASYMPTOTIC_CUT and abs(s) + 5.0 < 0.5 * abs(z):
        got = _expint_asymptotic(s, z, tol)
        if got is not None:
            return got
    return _expint_ray(s, z, tol)


def expint_step_up(s: complex, z: complex, value_below: complex) -> complex:
    """E_s from E_{s-1}:  E_s = (z E_{s-1} - e^{-z}) / (1 - s)."""
    s = complex(s)
    if abs(1 - s) < 1e-12:
        raise DomainError("order recursion is singular at s = 1")
    return (z * value_below - cmath.exp(-z)) / (1 - s)


_H1 = 2.5e-3
_H2 = 1e-2


def _d1_stencil(z: complex, s: complex, tol: float) -> complex:
    h = _H1
    inner = max(tol * h / 20.0, 1e-15)
    fm2 = expint_e(s - 2 * h, z, inner)
    fm1 = expint_e(s - h, z, inner)
    fp1 = expint_e(s + h, z, inner)
    fp2 = expint_e(s + 2 * h, z, inner)
    return (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h)


def expint_order_derivative(
    s: complex, z: complex, level: int = 1, tol: float = 1e-10
) -> complex:
    """Scaled order-derivative ((-1)^level / level!) d^level/ds^level E_s(z).

    level 1 is cross-checked against the differentiated order recursion;
    disagreement past 10x the requested tolerance raises ConvergenceError.
    Finite differences in float64 bottom out near 1e-11, hence the default.
    """
    if level not in (0, 1, 2):
        raise ValueError("level must be 0, 1 or 2")
    if not 1e-15 <= tol <= 1e-3:
        raise ValueError("tolerance must lie in [1e-15, 1e-3]")
    s = complex(s)
    z = complex(z)
    if level == 0:
        return expint_e(s, z, tol)
    if level == 1:
        d = _d1_stencil(z, s, tol)
        if abs(1 - s) > 1e-6:
            # -dE_s = (z (-dE_{s-1}) - E_s) / (1 - s)
            d_below = _d1_stencil(z, s - 1, tol)
            e_here = expint_e(s, z, max(tol / 10.0, 1e-15))
            via_rec = (z * (-d_below) - e_here) / (1 - s)
            if abs(via_rec - (-d)) > 10.0 * tol:
                raise ConvergenceError(
                    f"order-derivative stencil and recursion disagree by "
                    f"{abs(via_rec - (-d)):.3e} at s={s}, z={z}"
                )
        return -d
    h = _H2
    inner = max(tol * h * h / 40.0, 1e-15)
    fm2 = expint_e(s - 2 * h, z, inner)
    fm1 = expint_e(s - h, z, inner)
    f0 = expint_e(s, z, inner)
    fp1 = expint_e(s + h, z, inner)
    fp2 = expint_e(s + 2 * h, z, inner)
    d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h)
    return 0.5 * d2


def expint_conjugate_pair(
    k: int, order: complex, sign: int, tol: float = 1e-12
) -> complex:
    """E_order(i kappa) + sign * E_order(-i kappa) with kappa = pi (k + 1/2).

    Real orders use conjugate symmetry (one evaluation, exact pairing);
    sign must be +1 or -1.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if k < 0:
        raise ValueError("k must be >= 0")
    order = complex(order)
    z = 1j * half_odd_pi(k)
    up = expint_e(order, z, tol)
    if order.imag == 0.0:
        if sign == 1:
            return complex(2.0 * up.real, 0.0)
        return complex(0.0, 2.0 * up.imag)
    down = expint_e(order, -z, tol)
    return up + sign * down


def expint_pair_derivative(
    k: int, order: complex, sign: int, tol: float = 1e-10
) -> complex:
    """Same pairing as expint_conjugate_pair but on the level-1 scaled
    order-derivative."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    order = complex(order)
    z = 1j * half_odd_pi(k)
    up = expint_order_derivative(order, z, 1, tol)
    if order.imag == 0.0:
        if sign == 1:
            return complex(2.0 * up.real, 0.0)
        return complex(0.0, 2.0 * up.imag)
    down = expint_order_derivative(order, -z, 1, tol)
    return up + sign * down


def evaluate(req: ExpIntRequest) -> complex:
    """Dispatch an ExpIntRequest to the matching evaluator."""
    if req.derivative_level == 0:
        return expint_e(req.order, req.argument, req.tolerance)
    return expint_order_derivative(
        req.order, req.argument, req.derivative_level, req.tolerance
    )
