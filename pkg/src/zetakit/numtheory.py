"""Exact Bernoulli, Euler and harmonic number machinery.

Everything in this module runs on Fractions so the cross-identities between
the three families can be asserted as identities, == and nothing weaker.
Conventions: B_1 = -1/2, odd-index Euler numbers vanish.

Two independent generators exist for each family on purpose: the textbook
recurrences (bernoulli, euler_number) and the recursions that fall out of the
series manipulations elsewhere in the package (bernoulli_via_even_recursion,
euler_number_via_harmonic_recursion).  Tests hold them against each other.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import TableCapError
from .special import gamma_complex

INDEX_CAP = 256

_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]
_euler_cache: dict[int, Fraction] = {}
_harmonic_cache: list[Fraction] = [Fraction(0)]


@dataclass(frozen=True)
class ConstantTables:
    """Immutable snapshot of the memoized tables up to a chosen index."""

    bernoulli: tuple[Fraction, ...]
    euler: tuple[Fraction, ...]
    harmonic: tuple[Fraction, ...]


def _require_in_cap(n: int) -> None:
    if n > INDEX_CAP:
        raise TableCapError(f"index {n} exceeds cap {INDEX_CAP}")
    if n < 0:
        raise ValueError("index must be >= 0")


def bernoulli(n: int) -> Fraction:
    """B_n via the convolution recurrence sum_k C(n+1,k) B_k = 0."""
    _require_in_cap(n)
    with _lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            acc = Fraction(0)
            for k in range(m):
                acc += math.comb(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-acc / (m + 1))
        return _bernoulli_cache[n]


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0 for convenience."""
    _require_in_cap(n)
    with _lock:
        while len(_harmonic_cache) <= n:
            m = len(_harmonic_cache)
            _harmonic_cache.append(_harmonic_cache[-1] + Fraction(1, m))
        return _harmonic_cache[n]


def euler_number(n: int) -> Fraction:
    """Euler number as the Bernoulli combination

        E(n) = n! sum_{k=0}^n (2^{k+1} - 2^{2k+2}) B_{k+1} / ((n-k)! (k+1)!)

    which is integer-valued; E(odd) = 0 comes out of the sum on its own.
    """
    _require_in_cap(n)
    with _lock:
        hit = _euler_cache.get(n)
    if hit is not None:
        return hit
    acc = Fraction(0)
    for k in range(n + 1):
        num = (2 ** (k + 1) - 2 ** (2 * k + 2)) * bernoulli(k + 1)
        acc += num / (math.factorial(n - k) * math.factorial(k + 1))
    val = acc * math.factorial(n)
    with _lock:
        _euler_cache[n] = val
    return val


def euler_polynomial(n: int, z):
    """Euler polynomial at z, exact when z is a Fraction.

    Built from the same Bernoulli combination as euler_number:
        E(n, z) = n! sum_{k=0}^n z^k (2 - 2^{n-k+2}) B_{n-k+1} / (k! (n-k+1)!)
    """
    _require_in_cap(n)
    acc = Fraction(0) if isinstance(z, Fraction) else 0.0
    coeffs = euler_polynomial_coefficients(n)
    for k in range(n, -1, -1):
        acc = acc * z + (coeffs[k] if isinstance(z, Fraction) else float(coeffs[k]))
    return acc


def euler_polynomial_coefficients(n: int) -> tuple[Fraction, ...]:
    """Coefficients of the Euler polynomial, constant term first."""
    _require_in_cap(n)
    nf = math.factorial(n)
    out = []
    for k in range(n + 1):
        b = bernoulli(n - k + 1) * (2 - 2 ** (n - k + 2))
        out.append(Fraction(nf, math.factorial(k) * math.factorial(n - k + 1)) * b)
    return tuple(out)


def euler_number_via_harmonic_recursion(m: int) -> Fraction:
    """E(2m) from the harmonic-weighted recursion

    E(2m) = -4 sum_{k<m} E(2k)/ (2k)! * sum_{j=0}^{m-k} (2m)! /
            ((2m+1-2k-2j)! (2j+1) (2j+1)!)
          + 4 (2m)! sum_{k<m} E(2k) H_{2m-2k+2} / ((2m-2k+2)! (2k)!)
          + 1/((2m+1)(m+1)^2)

    seeded only by E(0) = 1; agreement with euler_number is a theorem here,
    not an implementation detail.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    _require_in_cap(2 * m)
    vals: dict[int, Fraction] = {0: Fraction(1)}
    for mm in range(1, m + 1):
        g = math.factorial(2 * mm)
        first = Fraction(0)
        second = Fraction(0)
        for k in range(mm):
            ek = vals[k]
            inner = Fraction(0)
            for j in range(0, mm - k + 1):
                inner += Fraction(
                    g, math.factorial(2 * mm + 1 - 2 * k - 2 * j)
                ) / ((2 * j + 1) * math.factorial(2 * j + 1))
            first += ek / math.factorial(2 * k) * inner
            second += ek * harmonic(2 * mm - 2 * k + 2) / (
                math.factorial(2 * mm - 2 * k + 2) * math.factorial(2 * k)
            )
        vals[mm] = (
            -4 * first + 4 * g * second + Fraction(1, (2 * mm + 1) * (mm + 1) ** 2)
        )
    return vals[m]


def bernoulli_via_even_recursion(n_half: int) -> Fraction:
    """B_{2N+2} from the closed recursion over earlier even-index values:

    B_{2N+2} = (2N+2)! / (2^{2N} (2^{2N+2}-1)) *
               sum_{k<N} 2^{2k} (1 - 2^{2k+2}) B_{2k+2} / ((2N-2k)! (2k+2)!)
             + (N+1) / (2^{2N+1} (2^{2N+2}-1))

    Self-seeding: N = 0 has an empty sum and yields 1/6.
    """
    if n_half < 0:
        raise ValueError("N must be >= 0")
    _require_in_cap(2 * n_half + 2)
    vals: dict[int, Fraction] = {}
    for nn in range(n_half + 1):
        acc = Fraction(0)
        for k in range(nn):
            acc += (
                Fraction(2 ** (2 * k) * (1 - 2 ** (2 * k + 2)))
                * vals[k]
                / (math.factorial(2 * nn - 2 * k) * math.factorial(2 * k + 2))
            )
        head = Fraction(math.factorial(2 * nn + 2), 2 ** (2 * nn) * (2 ** (2 * nn + 2) - 1)) * acc
        tail = Fraction(nn + 1, 2 ** (2 * nn + 1) * (2 ** (2 * nn + 2) - 1))
        vals[nn] = head + tail
    return vals[n_half]


def bernoulli_from_euler(n: int) -> Fraction:
    """Rebuild B_{2n} from even Euler numbers:

    B_{2n} = (2n)! / (2^{2n} (2^{2n}-1)) sum_{k<n} E(2k) / ((2k)! (2n-2k-1)!)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_in_cap(2 * n)
    acc = Fraction(0)
    for k in range(n):
        acc += euler_number(2 * k) / (
            math.factorial(2 * k) * math.factorial(2 * n - 2 * k - 1)
        )
    return Fraction(math.factorial(2 * n), 2 ** (2 * n) * (2 ** (2 * n) - 1)) * acc


def euler_number_asymptotic(n: int, terms: int) -> float:
    """Truncated alternating-sum approximation to E(n), n even.

    Exact in the limit; each extra term extends the agreement by roughly
    (2N+3)^{-(n+1)} relative.
    """
    if n < 2 or n % 2:
        raise ValueError("needs even n >= 2")
    acc = 0.0
    for k in range(terms + 1):
        acc += (-1) ** k / (k + 0.5) ** (n + 1)
    return 2.0 * math.factorial(n) * (-1) ** (n // 2) * math.pi ** (-n - 1) * acc


# ------------------------------------------------- exact cross identities ---


def euler_triangle_sum(m: int) -> Fraction:
    """sum_j E(2j) / ((2m-2j)! (2j)!) over 0 <= j <= m; zero for m >= 1."""
    acc = Fraction(0)
    for j in range(m + 1):
        acc += euler_number(2 * j) / (
            math.factorial(2 * m - 2 * j) * math.factorial(2 * j)
        )
    return acc


def euler_bernoulli_harmonic_sides(m: int) -> tuple[Fraction, Fraction]:
    """Both sides of the harmonic-weighted Euler/Bernoulli link:

    lhs = sum_{j=0}^{m} E(2j) H_{2m-2j} / ((2m-2j)! (2j)!)
    rhs = sum_{j=0}^{2m-1} (2^{2j+2} - 2^{j+1}) B_{j+1} / ((2m-j) (2m-j)! (j+1)!)
    """
    lhs = Fraction(0)
    for j in range(m + 1):
        lhs += (
            euler_number(2 * j)
            * harmonic(2 * m - 2 * j)
            / (math.factorial(2 * m - 2 * j) * math.factorial(2 * j))
        )
    rhs = Fraction(0)
    for j in range(2 * m):
        rhs += (
            (2 ** (2 + 2 * j) - 2 ** (j + 1))
            * bernoulli(j + 1)
            / ((2 * m - j) * math.factorial(2 * m - j) * math.factorial(j + 1))
        )
    return lhs, rhs


def euler_gamma_coefficient(m: int) -> Fraction:
    """Coefficient of the Euler-Mascheroni constant left over when the psi
    values inside the harmonic link are expanded; must collapse to zero."""
    acc = Fraction(0)
    for j in range(m + 1):
        acc -= euler_number(2 * j) / (
            math.factorial(2 * m - 2 * j) * math.factorial(2 * j)
        )
    return acc


def euler_harmonic_bernoulli_sides(m: int) -> tuple[Fraction, Fraction]:
    """Both sides of the shorter harmonic link (upper index m-1 on the left):

    lhs = sum_{j<m} E(2j) H_{2m-2j} / ((2m-2j)! (2j)!)
    rhs = sum_{k=1}^{m} 2^{2k} (2^{2k}-1) B_{2k} /
          ((2m-2k+1) (2m-2k+1)! (2k)!)  -  1 / (2m (2m)!)
    """
    lhs = Fraction(0)
    for j in range(m):
        lhs += (
            euler_number(2 * j)
            * harmonic(2 * m - 2 * j)
            / (math.factorial(2 * m - 2 * j) * math.factorial(2 * j))
        )
    rhs = -Fraction(1, 2 * m * math.factorial(2 * m))
    for k in range(1, m + 1):
        rhs += (
            Fraction(2 ** (2 * k) * (2 ** (2 * k) - 1))
            * bernoulli(2 * k)
            / ((2 * m - 2 * k + 1) * math.factorial(2 * m - 2 * k + 1) * math.factorial(2 * k))
        )
    return lhs, rhs


def euler_gamma_ratio_sides(s: complex, n: int) -> tuple[complex, complex]:
    """Float check of the gamma-ratio identity tying the Euler j-sum to a
    Bernoulli k-sum; exact as a rational function of s, evaluated here
    pointwise.

    lhs = sum_{j<n} Gamma(2j+s) E(2j) / (2j)!
    rhs = 2^{2n} Gamma(s+2n) sum_{k<2n} (2^{-k} - 2^{2n-2k}) B_{2n-k} /
          (k! (2n-k)! (2n-1+s-k))
    """
    s = complex(s)
    lhs = 0j
    for j in range(n):
        lhs += gamma_complex(2 * j + s) * float(euler_number(2 * j)) / math.factorial(2 * j)
    rhs = 0j
    for k in range(2 * n):
        rhs += (
            (2.0 ** (-k) - 2.0 ** (2 * n - 2 * k))
            * float(bernoulli(2 * n - k))
            / (math.factorial(k) * math.factorial(2 * n - k) * (2 * n - 1 + s - k))
        )
    rhs *= 2.0 ** (2 * n) * gamma_complex(s + 2 * n)
    return lhs, rhs


def tables(max_index: int = 64) -> ConstantTables:
    """Build (or reuse) the memoized tables and hand back a frozen snapshot."""
    _require_in_cap(max_index)
    return ConstantTables(
        bernoulli=tuple(bernoulli(i) for i in range(max_index + 1)),
        euler=tuple(euler_number(i) for i in range(max_index + 1)),
        harmonic=tuple(harmonic(i) for i in range(max_index + 1)),
    )
