"""Divergent-series and Mellin-Barnes machinery for the odd zeta values.

Covers the optimally truncated asymptotic expansion of the half-offset
alternating Hurwitz eta, the auxiliary double integral behind zeta(2m+1),
its vertical-line contour twin, and the sine-integral reductions of the
conjugate exponential-integral pairs. Divergent hypergeometric objects are
exposed only through regularized closed forms; the raw series appears just
as a smallest-term probe with an explicit error bound.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .expint import expint_conjugate_pair, half_odd_pi
from .numtheory import euler_bernoulli_harmonic_sides, euler_number, harmonic
from .quadrature import integrate_oscillatory, integrate_real
from .series import alternating_half_power_sum
from .special import digamma, gamma_complex, sine_integral

_PI = math.pi


# ----------------------------------------------- alternating Hurwitz eta ----


def eta_hurwitz_half_exact(t: float) -> float:
    """sum_k (-1)^k / (k + (t+1)/2), closed digamma-difference form."""
    t = float(t)
    if t <= 0:
        raise DomainError("t must be positive")
    return (digamma(t / 4.0 + 0.75).real - digamma(t / 4.0 + 0.25).real) / 2.0


@dataclass(frozen=True)
class AsymptoticEvaluation:
    """Partial sums of a divergent expansion next to the exact value."""

    t: float
    truncation_order: int
    partial_sums: tuple[float, ...]
    optimal_index: int
    exact_value: float


def eta_hurwitz_half_asymptotic(t: float, m: int) -> AsymptoticEvaluation:
    """Partial sums S_K = sum_{k<=K} E_2k / t^{2k+1} for K = 0..m.

    The expansion diverges for every fixed t; the returned record reports
    where the truncation error bottoms out instead of failing.
    """
    t = float(t)
    if t < 2.0:
        raise DomainError("t >= 2 required")
    if m < 0:
        raise DomainError("m must be >= 0")
    exact = eta_hurwitz_half_exact(t)
    sums = []
    acc = 0.0
    for k in range(m + 1):
        acc += float(euler_number(2 * k)) / t ** (2 * k + 1)
        sums.append(acc)
    opt = min(range(len(sums)), key=lambda i: abs(sums[i] - exact))
    return AsymptoticEvaluation(t, m, tuple(sums), opt, exact)


def truncation_error_slope(order: int, t_values=(10.0, 20.0, 40.0)) -> float:
    """Fitted log-log slope of |S_order - exact| against t."""
    ts = [float(t) for t in t_values]
    errs = [
        abs(eta_hurwitz_half_asymptotic(t, order).partial_sums[-1]
            - eta_hurwitz_half_exact(t))
        for t in ts
    ]
    lt = [math.log(t) for t in ts]
    le = [math.log(max(e, 1e-300)) for e in errs]
    n = len(ts)
    mt = sum(lt) / n
    me = sum(le) / n
    return sum((a - mt) * (b - me) for a, b in zip(lt, le)) / sum(
        (a - mt) ** 2 for a in lt
    )


# ---------------------------------------------------- odd zeta, integrals ---


def _harmonic_euler_sum(m: int) -> float:
    return float(
        sum(
            euler_number(2 * j) * harmonic(2 * m - 2 * j)
            / (math.factorial(2 * j) * math.factorial(2 * m - 2 * j))
            for j in range(m + 1)
        )
    )


def odd_zeta_kernel_integral(m: int, tol: float = 1e-9, swapped: bool = False) -> float:
    """The cosh-damped double integral whose value is
    (2^{2m+1}-1) zeta(2m+1) + (-1)^m pi^{2m} sum_j E_2j H_{2m-2j}/((2j)!(2m-2j)!).

    swapped integrates the same mass in the other nesting order.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    pref = 2.0 ** (2 * m + 3) * _PI ** (2 * m) / math.factorial(2 * m)
    inner_tol = max(tol / 200.0, 1e-13)
    big = 8.0
    while pref * big ** (2 * m + 2) * math.exp(-_PI * big) > tol * 1e-4:
        big += 4.0
        if big > 60.0:
            raise ConvergenceError("outer truncation point not found")

    if not swapped:

        def outer(t):
            t = float(t)
            if t == 0.0:
                return 0.0
            inner = integrate_real(
                lambda x: (1.0 - x) ** (2 * m) * x / (4.0 * t * t * x * x + 1.0),
                0.0, 1.0, inner_tol,
            ).value.real
            return t ** (2 * m + 2) / math.cosh(_PI * t) * inner

        pts = [p for p in (2.0, 6.0, 12.0) if p < big]
        quad = integrate_real(outer, 0.0, big, tol / 4.0, points=pts)
    else:

        def outer(x):
            x = float(x)
            inner = integrate_real(
                lambda t: t ** (2 * m + 2)
                / ((4.0 * t * t * x * x + 1.0) * np.cosh(_PI * t)),
                0.0, big, inner_tol, points=[2.0, 6.0],
            ).value.real
            return (1.0 - x) ** (2 * m) * x * inner

        quad = integrate_real(outer, 0.0, 1.0, tol / 4.0)
    return pref * quad.value.real


def zeta_odd_via_double_integral(m: int, tol: float = 1e-9) -> float:
    """zeta(2m+1) recovered from the kernel double integral."""
    a_val = odd_zeta_kernel_integral(m, tol)
    head = (-1.0) ** m * _PI ** (2 * m) * _harmonic_euler_sum(m)
    return (a_val - head) / (2.0 ** (2 * m + 1) - 1.0)


def mellin_barnes_zeta_odd(m: int, tol: float = 1e-9) -> complex:
    """zeta(2m+1) from the vertical-line contour form of the kernel integral.

    The contour value is kept complex so the caller can use the vanishing
    imaginary part as a self-check. The truncation half-width doubles until
    three successive wing pairs move the total by less than tol each.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    w0 = 2 * m + 2
    sum_tol = max(tol / 100.0, 1e-14)

    def f(u):
        u = float(u)
        return (
            gamma_complex(1.0 - 2j * u)
            * cmath.exp(2j * u * math.log(_PI))
            * alternating_half_power_sum(w0 - 2j * u, sum_tol)
            / math.cosh(_PI * u)
        )

    wing = 4.0
    total = integrate_real(f, -wing, wing, tol / 8.0, points=[0.0]).value
    quiet = 0
    while quiet < 3:
        lo, hi = wing, 2.0 * wing
        right = integrate_real(f, lo, hi, tol / 8.0).value
        left = integrate_real(f, -hi, -lo, tol / 8.0).value
        total += left + right
        quiet = quiet + 1 if abs(left + right) < tol / 4.0 else 0
        wing = hi
        if wing > 64.0:
            raise ConvergenceError("contour tail failed to settle")
    a_val = total / _PI ** 2
    head = (-1.0) ** m * _PI ** (2 * m) * _harmonic_euler_sum(m)
    return (a_val - head) / (2.0 ** (2 * m + 1) - 1.0)


# --------------------------------------------- conjugate pairs, Si forms ----


def expint_pair_si_identity(k: int, p: int) -> tuple[float, float]:
    """Both sides of the closed sine-integral form of the order-2p pair.

    lhs scales E_2p(i kappa) + E_2p(-i kappa); rhs is the finite inverse
    power sum plus the Si tail. Equality is an identity, not an expansion.
    """
    if k < 0 or p < 1:
        raise DomainError("need k >= 0 and p >= 1")
    z = half_odd_pi(k)
    pair = expint_conjugate_pair(k, 2 * p, 1, 1e-13).real
    lhs = (-1.0) ** p * math.factorial(2 * p - 1) * pair / z ** (2 * p - 1)
    rhs = -2.0 * (sine_integral(z) - _PI / 2.0)
    for j in range(1, p):
        rhs += 2.0 * (-1.0) ** k * (-1.0) ** j * math.factorial(2 * j - 1) / z ** (2 * j)
    return lhs, rhs


def hyp1f2_series(a: float, b1: float, b2: float, x: float, tol: float = 1e-14) -> float:
    """1F2 by its everywhere-convergent power series with a tail-ratio stop."""
    if (b1 <= 0 and b1 == int(b1)) or (b2 <= 0 and b2 == int(b2)):
        raise DomainError("lower parameter is a nonpositive integer")
    term = 1.0
    total = 1.0
    for n in range(600):
        term *= (a + n) * x / ((b1 + n) * (b2 + n) * (n + 1.0))
        total += term
        ratio = abs(x) / ((n + 2.0) * abs((b1 + n + 1) * (b2 + n + 1)))
        if abs(term) < tol * max(1.0, abs(total)) and ratio < 0.5:
            return total
    raise ConvergenceError("1F2 series cap reached")


def hyp1f2_reduction(k: int, p: int) -> tuple[float, float]:
    """Both sides of the contiguous reduction tying 1F2(1/2-p; 1/2, 3/2-p)
    back to the Si kernel 1F2(1/2; 3/2, 3/2) and a finite sum."""
    if k < 0 or p < 2:
        raise DomainError("need k >= 0 and p >= 2")
    z = half_odd_pi(k)
    x = -z * z / 4.0
    lhs = hyp1f2_series(0.5 - p, 0.5, 1.5 - p, x)
    gam = math.factorial(2 * p - 2)
    rhs = (-1.0) ** (p + 1) * z ** (2 * p) / gam * hyp1f2_series(0.5, 1.5, 1.5, x)
    fin = 0.0
    for j in range(1, p):
        fin += math.factorial(2 * j - 1) * (-1.0) ** j / z ** (2 * j)
    rhs += (-1.0) ** (k + p) * z ** (2 * p - 1) / gam * fin
    return lhs, rhs


def regularized_3f0(p: int, k: int) -> float:
    """Regularized 3F0(1, p, p+1/2; ; -4/(pi(k+1/2))^2) via its closed
    Si-plus-finite-sum form; the divergent series itself is never summed."""
    if p < 1 or k < 0:
        raise DomainError("need p >= 1 and k >= 0")
    c = k + 0.5
    z = _PI * c
    tail = 0.0
    for j in range(1, p):
        tail += (-1.0) ** j * math.factorial(2 * j - 1) / z ** (2 * j)
    val = -((-1.0) ** p) * c ** (2 * p) * tail
    val += (-1.0) ** (p + k) * c ** (2 * p) * (sine_integral(z) - _PI / 2.0)
    return _PI ** (2 * p) / math.factorial(2 * p - 1) * val


def divergent_3f0_min_term(a1: float, a2: float, a3: float, x: float) -> tuple[float, float]:
    """Sum the (divergent) 3F0 series to its smallest term; returns the
    partial sum and the magnitude of the first omitted term as the bound."""
    term = 1.0
    total = 1.0
    j = 0
    while True:
        nxt = term * (a1 + j) * (a2 + j) * (a3 + j) * x / (j + 1.0)
        if abs(nxt) >= abs(term):
            return total, abs(nxt)
        total += nxt
        term = nxt
        j += 1


def si_split_identity(m: int) -> tuple[float, float]:
    """Check the oscillatory-tail identity behind the split, then return
    both sides of its exact rational consequence at index m.

    The quadrature leg verifies int_1^inf sin(pi(j+1/2)v)/v dv equals
    pi/2 - Si(pi(j+1/2)) for j = 0..5 before the rational sides are built.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    for j in range(6):
        kap = half_odd_pi(j)
        pts = [1.0] + [n / (j + 0.5) for n in range(j + 1, j + 42)]
        got = integrate_oscillatory(
            lambda v: np.sin(kap * v) / v, pts, 1e-11
        ).value.real
        want = _PI / 2.0 - sine_integral(kap)
        if abs(got - want) > 1e-9:
            raise ConvergenceError(
                f"oscillatory tail off by {abs(got - want):.2e} at j={j}"
            )
    lhs, rhs = euler_bernoulli_harmonic_sides(m)
    return float(lhs), float(rhs)


def digamma_weighted_sine_series(k: int) -> tuple[float, float]:
    """Digamma-weighted cosine-type series against its closed Si value.

    Cancellation grows like kappa^{2j}/(2j)! before the terms die, so
    binary64 only supports small k.
    """
    if not 0 <= k <= 6:
        raise DomainError("float64 cancellation limits k to 0..6")
    kap = half_odd_pi(k)
    total = 0.0
    pow_fact = 1.0
    j = 0
    while True:
        total += digamma(2 * j + 1).real * ((-1.0) ** j) * pow_fact
        j += 1
        pow_fact *= kap * kap / ((2.0 * j - 1.0) * (2.0 * j))
        if pow_fact * 6.0 < 1e-18 and 2.0 * j > kap:
            break
        if j > 300:
            raise ConvergenceError("series cap reached")
    return total, -((-1.0) ** k) * sine_integral(kap)
