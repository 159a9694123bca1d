"""Series representations of eta, zeta and zeta' built on E-function pairs.

The base series sums conjugate pairs E_s(+i pi(k+1/2)) + E_s(-i pi(k+1/2));
everything else here is a reshaping of that sum: recursion in the order,
reflection, odd/even integer specializations, order-derivatives, and two
theta-flavored rapidly convergent cross-checks.

All slowly convergent alternating k-sums go through the acceleration in
zetakit.accel; raw and pairwise summation stay available through
SeriesConfig for diagnostics.
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

from .accel import alternating_sum_with_estimate, terms_for_tolerance
from .errors import ConvergenceError, DomainError, PoleError
from .expint import expint_conjugate_pair, expint_e, expint_pair_derivative
from .numtheory import bernoulli, euler_number, harmonic
from .special import SeriesResult, digamma, fresnel_c, gamma_complex

_LN2 = math.log(2.0)
_LN10 = math.log(10.0)
_EPS = 2.2e-16
# i^n and (-i)^n, exact
_IPOW = (1.0 + 0j, 1j, -1.0 + 0j, -1j)
_MIPOW = (1.0 + 0j, -1j, -1.0 + 0j, 1j)

_ACCEL_MODES = ("none", "pairwise", "alternating-acceleration")


@dataclass(frozen=True)
class SeriesConfig:
    tolerance: float = 1e-10
    term_cap: int = 100_000
    acceleration: str = "alternating-acceleration"
    recursion_depth_n: int = 0

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 1 <= self.term_cap <= 10_000_000:
            raise ValueError("term_cap must lie in [1, 1e7]")
        if self.acceleration not in _ACCEL_MODES:
            raise ValueError(f"acceleration must be one of {_ACCEL_MODES}")
        if not 0 <= self.recursion_depth_n <= 40:
            raise ValueError("recursion_depth_n must lie in [0, 40]")


_DEFAULT = SeriesConfig()


def _pochhammer(s: complex, n: int) -> complex:
    out = 1.0 + 0j
    for i in range(n):
        out *= s + i
    return out


def _rgamma(s: complex) -> complex:
    """1/Gamma(s), zero at the poles."""
    s = complex(s)
    if s.imag == 0.0 and s.real <= 0.0 and s.real == round(s.real):
        return 0j
    return 1.0 / gamma_complex(s)


def _inner_tol(outer_tol: float, n_terms: int, scale: float) -> float:
    t = outer_tol / (4.0 * max(n_terms, 1) * max(scale, 1e-300))
    return min(max(t, 1e-15), 1e-3)


def _accelerated_k_sum(term, n_terms: int):
    vals = [term(k) for k in range(n_terms)]
    return alternating_sum_with_estimate(vals)


# --------------------------------------------------------------- reference --


def _eta_direct(s: complex, digits: float) -> complex:
    n = int(math.ceil((digits * _LN10 + math.pi * abs(s.imag) / 2 + 5) / 1.7627)) + 10
    terms = [(-1) ** k * cmath.exp(-s * math.log(k + 1)) for k in range(n)]
    val, _ = alternating_sum_with_estimate(terms)
    return val


def zeta_ref(s: complex, digits: float = 15.0) -> complex:
    """Independent reference zeta.

    Accelerated alternating series where the eta-to-zeta division is well
    conditioned; otherwise the functional equation with the mirror argument,
    whose division factor |1 - 2^s| is then bounded away from zero.
    """
    s = complex(s)
    if abs(s - 1.0) < 1e-13:
        raise PoleError("zeta has its pole at s = 1")
    if s.imag == 0.0 and s.real <= -2.0 and s.real == round(s.real) and int(s.real) % 2 == 0:
        return 0j
    # two routes whose bad sets (2^{1-s} near 1, 2^s near 1) are disjoint:
    # the alternating series divided by 1 - 2^{1-s}, or the functional
    # equation off the mirror point 1 - s divided there by 1 - 2^s
    denom = 1.0 - cmath.exp((1.0 - s) * _LN2)
    mdenom = 1.0 - cmath.exp(s * _LN2)
    direct_ok = abs(denom) >= 0.2
    mirror_ok = abs(mdenom) >= 0.2
    if (s.real >= 0.5 and direct_ok) or not mirror_ok:
        return _eta_direct(s, digits + max(0.0, 1.0 - 2.0 * s.real)) / denom
    zmirror = _eta_direct(1.0 - s, digits + 2) / mdenom
    return (
        cmath.exp(s * _LN2)
        * cmath.exp((s - 1.0) * math.log(math.pi))
        * cmath.sin(math.pi * s / 2.0)
        * gamma_complex(1.0 - s)
        * zmirror
    )


def eta_from_zeta_ref(s: complex, digits: float = 15.0) -> complex:
    s = complex(s)
    if abs(s - 1.0) < 1e-13:
        # eta is regular at the zeta pole
        return complex(_LN2)
    return (1.0 - cmath.exp((1.0 - s) * _LN2)) * zeta_ref(s, digits)


# ------------------------------------------------------------- base series --


def eta_via_expint_series(s: complex, cfg: SeriesConfig | None = None) -> SeriesResult:
    """eta(s) from the conjugate-pair series; see the module docstring.

    The pair terms carry a (-1)^k envelope and O(1/k) magnitude, so the
    accelerated mode is the practical one; "pairwise" and "none" are honest
    about non-convergence through the flag rather than raising.
    """
    cfg = cfg or _DEFAULT
    s = complex(s)
    pref = -cmath.exp((s - 1.0) * _LN2)
    scale = abs(pref)
    tol = cfg.tolerance

    if cfg.acceleration == "alternating-acceleration":
        extra = math.pi * abs(s.imag) / (2.0 * _LN10)
        n = terms_for_tolerance(tol / max(scale, 1e-300), extra) + int(abs(s)) // 2
        n = min(n, cfg.term_cap, 200)
        inner = _inner_tol(tol, n, scale)
        total, raw_est = _accelerated_k_sum(
            lambda k: expint_conjugate_pair(k, s, 1, inner), n
        )
        est = 10.0 * raw_est * scale + 1e-15 * abs(pref * total)
        return SeriesResult(pref * total, est, n, est <= tol)

    inner = _inner_tol(tol, 10, scale)
    if cfg.acceleration == "pairwise":
        total = 0j
        est = math.inf
        j = 0
        while 2 * (j + 1) <= cfg.term_cap:
            pair = expint_conjugate_pair(2 * j, s, 1, inner) + expint_conjugate_pair(
                2 * j + 1, s, 1, inner
            )
            total += pair
            est = scale * abs(pair) * (2 * j + 2)
            if est <= tol:
                break
            j += 1
        return SeriesResult(pref * total, est, 2 * (j + 1), est <= tol)

    total = 0j
    est = math.inf
    k = 0
    while k < cfg.term_cap:
        t = expint_conjugate_pair(k, s, 1, inner)
        total += t
        est = scale * abs(t)
        if est <= tol:
            break
        k += 1
    return SeriesResult(pref * total, est, min(k + 1, cfg.term_cap), est <= tol)


def eta_via_recursed_series(
    s: complex, n: int, cfg: SeriesConfig | None = None
) -> SeriesResult:
    """Order-recursed form: a finite head of exact odd lattice sums plus an
    E_{n+s} tail whose terms decay a full power of k faster per unit n.

    The head's gamma-ratio is carried as a Pochhammer product, so nonpositive
    integer s does not blow up.  Large n trades tail convergence for
    cancellation between head and tail; the realized float loss is folded
    into abs_error_estimate and a warning fires on million-fold cancellation.
    """
    cfg = cfg or _DEFAULT
    if not 0 <= n <= 40:
        raise ValueError("n must lie in [0, 40]")
    s = complex(s)
    tol = cfg.tolerance

    # head: 2^{s-1} sum_j (s)_{2j} E(2j)/(2j)!  (the odd lattice sums in
    # closed form already cancel the pi powers)
    p2s1 = cmath.exp((s - 1.0) * _LN2)
    head = 0j
    for j in range(0, (n - 1) // 2 + 1):
        head += (
            _pochhammer(s, 2 * j)
            * float(euler_number(2 * j))
            / math.factorial(2 * j)
        )
    head *= p2s1

    coeff = -p2s1 * _pochhammer(s, n) * _MIPOW[n % 4] / math.pi ** n
    scale = max(abs(coeff), 1e-300)
    extra = math.pi * abs(s.imag) / (2.0 * _LN10)
    nterms = min(
        terms_for_tolerance(tol / scale, extra) + int(abs(s)) // 2, cfg.term_cap, 200
    )
    inner = _inner_tol(tol, nterms, scale)
    pair_sign = 1 if n % 2 == 0 else -1
    flip = 1.0 if n % 2 == 0 else -1.0

    def term(k: int) -> complex:
        pair = flip * expint_conjugate_pair(k, n + s, pair_sign, inner)
        return pair / (k + 0.5) ** n

    total, raw_est = _accelerated_k_sum(term, nterms)
    tail = coeff * total
    value = head + tail

    big = max(abs(head), abs(tail))
    lost = big * _EPS
    est = 10.0 * raw_est * abs(coeff) + lost
    if big > 1e6 * tol and abs(value) < 1e-6 * big:
        warnings.warn(
            f"head/tail cancellation of {big / max(abs(value), 1e-300):.1e}x "
            f"at n={n}; result carries roughly {lost:.1e} float noise",
            stacklevel=2,
        )
    return SeriesResult(value, est, nterms, est <= tol)


def zeta_via_reflected_tail(
    s: complex, n: int, cfg: SeriesConfig | None = None
) -> SeriesResult:
    """Mirror-order form: (2^s - 1) zeta(s) from a finite Euler-number head
    plus an E_{1+n-s} tail.  Integer s is routed to the dedicated limit
    forms instead of evaluating 0/0; the routing is explicit here.
    """
    cfg = cfg or _DEFAULT
    if not 0 <= n <= 40:
        raise ValueError("n must lie in [0, 40]")
    s = complex(s)
    tol = cfg.tolerance

    if s.imag == 0.0 and s.real == round(s.real):
        si = int(s.real)
        if si == 1:
            raise PoleError("zeta has its pole at s = 1")
        if si == 0:
            return SeriesResult(complex(-0.5), 0.0, 0, True)
        if si >= 2 and si % 2 == 0:
            return SeriesResult(complex(zeta_even_closed_form(si // 2)), 0.0, 0, True)
        if si >= 3:
            return zeta_odd_via_exp_tail((si - 1) // 2, cfg)
        if si % 2 != 0:
            # 1 - 2m for m >= 1: exact Bernoulli value
            m = (1 - si) // 2
            val = float(Fraction(-1, 2 * m) * bernoulli(2 * m))
            return SeriesResult(complex(val), 0.0, 0, True)
        # negative even integers fall through: the head carries an exact
        # sin(pi s/2) zero and the tail an exact 1/Gamma zero

    half = math.pi * s / 2.0
    head = 0j
    for j in range(0, (n - 1) // 2 + 1):
        head += (
            gamma_complex(2 * j + 1 - s)
            * float(euler_number(2 * j))
            / math.factorial(2 * j)
        )
    head *= -cmath.exp((s - 1.0) * cmath.log(math.pi)) * cmath.sin(half)

    rg = _rgamma(s - n)
    q = 1.0 + n - s
    if rg == 0:
        tail = 0j
        raw_est = 0.0
        coeff = 0j
        nterms = 0
    else:
        coeff = (
            cmath.exp((s - n) * cmath.log(math.pi))
            * _IPOW[n % 4]
            * rg
            / (2.0 * cmath.cos(half))
        )
        scale = max(abs(coeff), 1e-300)
        extra = math.pi * abs(s.imag) / (2.0 * _LN10)
        nterms = min(
            terms_for_tolerance(tol / scale, extra) + int(abs(s)) // 2,
            cfg.term_cap,
            200,
        )
        inner = _inner_tol(tol, nterms, scale)
        pair_sign = 1 if n % 2 == 0 else -1
        flip = 1.0 if n % 2 == 0 else -1.0

        def term(k: int) -> complex:
            pair = flip * expint_conjugate_pair(k, q, pair_sign, inner)
            return pair / (k + 0.5) ** n

        total, raw_est = _accelerated_k_sum(term, nterms)
        tail = coeff * total

    denom = cmath.exp(s * _LN2) - 1.0
    if abs(denom) < 1e-3:
        raise ConvergenceError(f"2^s - 1 nearly vanishes at s={s}")
    value = (head + tail) / denom
    est = (10.0 * raw_est * abs(coeff) + _EPS * (abs(head) + abs(tail))) / abs(denom)
    return SeriesResult(value, est, nterms, est <= tol)


# -------------------------------------------------------- integer special --


def zeta_even_coefficient(m: int) -> Fraction:
    """Exact rational c with zeta(2m) = c * pi^{2m}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    acc = Fraction(0)
    for j in range(m):
        acc += euler_number(2 * j) / Fraction(
            math.factorial(2 * m - 2 * j - 1) * math.factorial(2 * j)
        )
    return Fraction((-1) ** m, 2) * acc / (1 - Fraction(2) ** (2 * m))


def zeta_even_closed_form(m: int) -> float:
    """zeta(2m) from the Euler-number sum, exactly rational times pi^{2m}."""
    return float(zeta_even_coefficient(m)) * math.pi ** (2 * m)


def _harmonic_euler_head(m: int) -> Fraction:
    # the psi-weighted head of the odd-zeta forms; the Euler-Mascheroni part
    # cancels exactly, leaving harmonic numbers
    acc = Fraction(0)
    for j in range(m + 1):
        acc += (
            euler_number(2 * j)
            * harmonic(2 * m - 2 * j)
            / Fraction(math.factorial(2 * j) * math.factorial(2 * m - 2 * j))
        )
    return acc


def zeta_odd_via_exp_tail(m: int, cfg: SeriesConfig | None = None) -> SeriesResult:
    """zeta(2m+1) from the harmonic-weighted Euler head plus the E_1 tail
    with weight (k+1/2)^{-(2m+1)}.  Singular at m=0 on both sides."""
    cfg = cfg or _DEFAULT
    if m < 1:
        raise DomainError("m must be >= 1; both sides are singular at m = 0")
    tol = cfg.tolerance
    head = -((-1.0) ** m) * math.pi ** (2 * m) * float(_harmonic_euler_head(m))

    denom = 2.0 ** (2 * m + 1) - 1.0
    nterms = min(terms_for_tolerance(tol) + 4, cfg.term_cap, 200)
    inner = _inner_tol(tol, nterms, 1.0)

    def term(k: int) -> complex:
        pair = expint_conjugate_pair(k, 1.0, -1, inner)
        return (1j / math.pi) * pair / (k + 0.5) ** (2 * m + 1)

    total, raw_est = _accelerated_k_sum(term, nterms)
    value = (head + total) / denom
    est = (10.0 * raw_est + _EPS * abs(head)) / denom
    return SeriesResult(value, est, nterms, est <= tol)


def zeta_odd_via_shifted_tail(
    m: int, p: int, cfg: SeriesConfig | None = None
) -> SeriesResult:
    """zeta(2m+1) from the order-p shifted tail; the value must come out
    independent of p, which the verification suite exploits."""
    cfg = cfg or _DEFAULT
    if m < 1 or p < 1:
        raise DomainError("requires m >= 1 and p >= 1")
    tol = cfg.tolerance
    head = -((-1.0) ** m) * math.pi ** (2 * m) * float(_harmonic_euler_head(m))

    mid = 0.0
    jtop = (p + 2 * m + 1) // 2 - 1
    for j in range(m + 1, jtop + 1):
        mid += (
            math.factorial(2 * j - 2 * m - 1)
            * float(euler_number(2 * j))
            / math.factorial(2 * j)
        )
    mid *= -((-1.0) ** m) * math.pi ** (2 * m)

    coeff = (
        (-1.0) ** p * math.factorial(p - 1) * _IPOW[p % 4] / math.pi ** p
    )
    scale = max(abs(coeff), 1e-300)
    nterms = min(terms_for_tolerance(tol / scale) + 4, cfg.term_cap, 200)
    inner = _inner_tol(tol, nterms, scale)
    pair_sign = 1 if p % 2 == 0 else -1
    flip = 1.0 if p % 2 == 0 else -1.0

    def term(k: int) -> complex:
        pair = flip * expint_conjugate_pair(k, float(p), pair_sign, inner)
        return pair / (k + 0.5) ** (p + 2 * m)

    total, raw_est = _accelerated_k_sum(term, nterms)
    denom = 2.0 ** (2 * m + 1) - 1.0
    value = (coeff * total + mid + head) / denom
    est = (10.0 * raw_est * scale + _EPS * (abs(head) + abs(mid))) / denom
    return SeriesResult(value, est, nterms, est <= tol)


def negative_order_pair_identity(
    m: int, p: int, cfg: SeriesConfig | None = None
) -> tuple[complex, complex]:
    """Both sides of the negative-order pair-sum identity, 0 <= p <= 2m.

    The left side is the accelerated k-sum of exact closed-form E_{-p}
    pairs; the right side is a finite Euler-number sum (exact rational).
    p = 2m reproduces the trivial-zero sum, p = 2m-1 and 2m-2 the two
    classical specializations.
    """
    cfg = cfg or _DEFAULT
    if m < 1:
        raise DomainError("m must be >= 1")
    if not 0 <= p <= 2 * m:
        raise DomainError("p must lie in [0, 2m]")
    tol = cfg.tolerance

    coeff = (
        math.pi ** (p - 2 * m) * (-1.0) ** m * _MIPOW[p % 4] / math.factorial(p)
    )
    nterms = min(terms_for_tolerance(tol) + 4, cfg.term_cap, 200)
    inner = _inner_tol(tol, nterms, max(abs(coeff), 1e-300))
    pair_sign = 1 if p % 2 == 0 else -1
    flip = 1.0 if p % 2 == 0 else -1.0

    def term(k: int) -> complex:
        pair = flip * expint_conjugate_pair(k, float(-p), pair_sign, inner)
        return pair / (k + 0.5) ** (2 * m - p)

    total, _ = _accelerated_k_sum(term, nterms)
    lhs = coeff * total

    j0 = (2 * m - p + 1) // 2
    acc = Fraction(0)
    for j in range(j0, m + 1):
        acc += euler_number(2 * j) / Fraction(
            math.factorial(2 * m - 2 * j) * math.factorial(2 * j)
        )
    rhs = complex(float(-acc))
    return lhs, rhs


# ------------------------------------------------------------ other forms --


def zeta_half_fresnel(cfg: SeriesConfig | None = None) -> SeriesResult:
    """zeta(1/2) from the grouped Fresnel-cosine series.

    Each grouped term is (2 C(sqrt(2k+1)) - 1)/sqrt(k+1/2); the grouping is
    what makes the envelope alternate cleanly, so acceleration applies to
    the groups, never the raw integrand pieces.
    """
    cfg = cfg or _DEFAULT
    tol = cfg.tolerance
    pref = 1.0 / (1.0 - math.sqrt(2.0))
    n = min(max(terms_for_tolerance(tol / abs(pref)), 40), cfg.term_cap, 200)
    terms = [
        (2.0 * fresnel_c(math.sqrt(2.0 * k + 1.0)) - 1.0) / math.sqrt(k + 0.5)
        for k in range(n)
    ]
    total, raw_est = alternating_sum_with_estimate(terms)
    value = pref * total
    est = 10.0 * raw_est * abs(pref) + 1e-14
    return SeriesResult(complex(value), est, n, est <= tol)


def fresnel_grouped_term(k: int) -> float:
    """One grouped term of the zeta(1/2) series, exposed for the decay and
    intermediate-form checks."""
    return (2.0 * fresnel_c(math.sqrt(2.0 * k + 1.0)) - 1.0) / math.sqrt(k + 0.5)


def alternating_half_power_sum(w: complex, tol: float = 1e-12) -> complex:
    """sum_k (-1)^k (k+1/2)^{-w}, accelerated; entire in w."""
    w = complex(w)
    n = terms_for_tolerance(tol, math.pi * abs(w.imag) / (2.0 * _LN10)) + int(
        abs(w.imag)
    )
    terms = [
        (-1) ** k * cmath.exp(-w * math.log(k + 0.5)) for k in range(n)
    ]
    val, _ = alternating_sum_with_estimate(terms)
    return val


# -------------------------------------------------------------- derivative --


def zeta_derivative_series(
    s: complex, n: int, cfg: SeriesConfig | None = None
) -> SeriesResult:
    """zeta'(s) via order-derivative pair sums.

    n = 0 and n = 1 are structurally different routes (useful as mutual
    checks); n >= 2 is the general recursed form.  The stencil floor of the
    level-1 derivatives (~1e-11) is included in the error estimate.
    """
    cfg = cfg or _DEFAULT
    if n < 0 or n > 40:
        raise ValueError("n must lie in [0, 40]")
    s = complex(s)
    if abs(s - 1.0) < 1e-13:
        raise PoleError("zeta' route undefined at the pole s = 1")
    tol = cfg.tolerance
    zs = zeta_ref(s)
    eta_factor = 1.0 - cmath.exp((1.0 - s) * _LN2)
    if abs(eta_factor) < 1e-3:
        raise ConvergenceError(f"1 - 2^(1-s) nearly vanishes at s={s}")
    p2s1 = cmath.exp((s - 1.0) * _LN2)
    dtol = max(tol / 100.0, 1e-12)

    if n == 0:
        nterms = min(terms_for_tolerance(max(tol, 1e-9)) + 6, cfg.term_cap, 200)
        total, raw_est = _accelerated_k_sum(
            lambda k: expint_pair_derivative(k, s, 1, dtol), nterms
        )
        num = _LN2 * (1.0 - cmath.exp((2.0 - s) * _LN2)) * zs + p2s1 * total
        value = num / eta_factor
        est = (10.0 * raw_est * abs(p2s1) + 3e-11) / abs(eta_factor)
        return SeriesResult(value, est, nterms, est <= tol)

    if n == 1:
        if abs(s) < 1e-9:
            raise DomainError("the n = 1 route divides by s; use n = 0 at 0")
        nterms = min(terms_for_tolerance(max(tol, 1e-9)) + 6, cfg.term_cap, 200)

        def term(k: int) -> complex:
            return -expint_pair_derivative(k, s + 1, -1, dtol) / (k + 0.5)

        total, raw_est = _accelerated_k_sum(term, nterms)
        coeff = cmath.exp(s * _LN2) * (1j * s / (2.0 * math.pi))
        num = (
            -coeff * total
            + (_LN2 * (1.0 - cmath.exp((2.0 - s) * _LN2)) + eta_factor / s) * zs
            - p2s1 / s
        )
        value = num / eta_factor
        est = (10.0 * raw_est * abs(coeff) + 3e-11) / abs(eta_factor)
        return SeriesResult(value, est, nterms, est <= tol)

    head = 0j
    psi_sn = digamma(s + n)
    for j in range(0, (n - 1) // 2 + 1):
        head += (
            (digamma(2 * j + s) - psi_sn)
            * _pochhammer(s, 2 * j)
            * float(euler_number(2 * j))
            / math.factorial(2 * j)
        )
    head *= p2s1

    coeff = p2s1 * _IPOW[n % 4] * (-1.0) ** n * _pochhammer(s, n) / math.pi ** n
    nterms = min(terms_for_tolerance(max(tol, 1e-9)) + 6, cfg.term_cap, 200)
    pair_sign = 1 if n % 2 == 0 else -1
    flip = 1.0 if n % 2 == 0 else -1.0

    def term(k: int) -> complex:
        pair = flip * expint_pair_derivative(k, s + n, pair_sign, dtol)
        return pair / (k + 0.5) ** n

    total, raw_est = _accelerated_k_sum(term, nterms)
    rest = (
        (1.0 - cmath.exp((2.0 - s) * _LN2)) * _LN2
        + (psi_sn - digamma(s)) * eta_factor
    ) * zs
    value = (head + coeff * total + rest) / eta_factor
    est = (10.0 * raw_est * abs(coeff) + 3e-11 + _EPS * abs(head)) / abs(eta_factor)
    return SeriesResult(value, est, nterms, est <= tol)


# ------------------------------------------------------- theta-type checks --


def paris_zeta(
    s: complex, lam: complex = 1.0, cfg: SeriesConfig | None = None, n_max: int = 8
) -> SeriesResult:
    """zeta(s) from the two Gaussian-tail E-sums with free parameter lam,
    |arg lam| <= pi/2.  The value must not depend on lam; terms fall off
    like exp(-pi n^2 min(|lam|, 1/|lam|)) so n_max = 8 is already overkill.
    """
    cfg = cfg or _DEFAULT
    s = complex(s)
    lam = complex(lam)
    if lam == 0 or lam.real < -1e-15:
        raise DomainError("lambda must satisfy |arg lambda| <= pi/2")
    if abs(s) < 1e-13 or abs(s - 1.0) < 1e-13:
        raise PoleError("representation divides by s and s - 1")
    tol = cfg.tolerance
    inner = min(max(tol / 10.0, 1e-15), 1e-3)
    sq = cmath.sqrt(lam)
    t1 = 0j
    t2 = 0j
    last = 0.0
    for k in range(1, n_max + 1):
        a = expint_e(1.0 - s / 2.0, math.pi * k * k * lam, inner)
        b = expint_e((s + 1.0) / 2.0, math.pi * k * k / lam, inner)
        t1 += a
        t2 += b
        last = abs(a) + abs(b)
    bracket = t1 + t2 / sq + 1.0 / (sq * (s - 1.0)) - 1.0 / s
    pref = cmath.exp((s / 2.0) * cmath.log(math.pi * lam)) * _rgamma(s / 2.0)
    value = pref * bracket
    est = abs(pref) * (last + 10.0 * inner) + _EPS * abs(value)
    return SeriesResult(value, est, 2 * n_max, est <= tol)


def leclair_xi(s: complex, cfg: SeriesConfig | None = None, n_max: int = 8) -> SeriesResult:
    """Completed xi(s) as three Gaussian-tail sums; symmetric under
    s -> 1 - s by construction of the underlying theta identity."""
    cfg = cfg or _DEFAULT
    s = complex(s)
    tol = cfg.tolerance
    inner = min(max(tol / 10.0, 1e-15), 1e-3)
    a = 0j
    b = 0j
    c = 0.0
    for k in range(1, n_max + 1):
        z = math.pi * k * k
        a += k * k * expint_e(-s / 2.0, z, inner)
        b += k * k * expint_e((s - 1.0) / 2.0, z, inner)
        c += k * k * math.exp(-z)
    value = math.pi * ((s - 1.0) * a - s * b) + 4.0 * math.pi * c
    est = 20.0 * inner * math.pi * (abs(s) + 1.0) + _EPS * abs(value)
    return SeriesResult(value, est, 3 * n_max, est <= tol)


def gaussian_lattice_constant(n_max: int = 8) -> float:
    """4 pi sum n^2 exp(-pi n^2); closed form pi^{1/4} / (2 Gamma(3/4))."""
    return 4.0 * math.pi * sum(
        k * k * math.exp(-math.pi * k * k) for k in range(1, n_max + 1)
    )
