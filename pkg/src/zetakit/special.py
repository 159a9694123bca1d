"""Classical special functions, stdlib floats only.

Algorithms, for the record:
  gamma     Lanczos rational approximation (g = 607/128, 15 coefficients,
            the Godfrey set) plus reflection for Re z < 1/2
  digamma   upward recurrence into |z| >= 12 then the Bernoulli asymptotic
  polygamma recurrence + asymptotic, real x > 0
  Si, Ci    Maclaurin series below x = 12, Laplace auxiliary integrals above
  fresnel_c Taylor below x = 2, complementary tail summed over half periods
  erf       Taylor below 2, Lentz continued fraction for erfc above
  polylog   defining series on (0, 1)

Nothing here imports numpy or any third-party package, so the bottom layer
of the package stays importable and bit-reproducible everywhere.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .accel import alternating_sum
from .errors import ConvergenceError, DomainError, PoleError

EULER_GAMMA = 0.5772156649015328606


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of an infinite-sum (or quadrature-backed) evaluation."""

    value: complex
    abs_error_estimate: float
    terms_used: int
    converged: bool


# ---------------------------------------------------------------- gamma ---

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_COEFFS = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def _check_pole(z: complex, what: str) -> None:
    n = round(z.real)
    if n <= 0 and abs(z - n) < 1e-14:
        raise PoleError(f"{what} has a pole at {n}; got {z}")


def gamma_complex(z) -> complex:
    """Gamma function on the complex plane, principal values.

    Relative error stays below ~1e-13 for |z| <= 50 off the poles.
    """
    z = complex(z)
    _check_pole(z, "gamma")
    if z.real < 0.5:
        # reflection; sin(pi z) is safe because we are off the pole lattice
        return math.pi / (cmath.sin(math.pi * z) * gamma_complex(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, 15):
        acc += _LANCZOS_COEFFS[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (zz + 0.5) * cmath.exp(-t) * acc


def log_gamma_real(x: float) -> float:
    """log Gamma(x) for real x > 0, used to keep large ratios in range."""
    if x <= 0:
        raise DomainError(f"log_gamma_real needs x > 0, got {x}")
    if x < 150:
        return math.log(abs(gamma_complex(x)))
    # Stirling is plenty at this size
    return (x - 0.5) * math.log(x) - x + 0.5 * math.log(2 * math.pi) + 1.0 / (12.0 * x)


# ------------------------------------------------------ digamma family ---

# B_{2n}/(2n) for n = 1..8, feeding the asymptotic tail of psi
_PSI_TAIL = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
)

# B_{2k} as floats for the polygamma asymptotic
_BERN_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def digamma(z) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z); abs error <= ~1e-12 for 0.1 <= |z| <= 100."""
    z = complex(z)
    _check_pole(z, "digamma")
    if z.real < 0:
        # reflection keeps the recurrence short on the left half plane
        return digamma(1.0 - z) - math.pi / cmath.tan(math.pi * z)
    shift = 0j
    while z.real < 12.0:
        shift -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    acc = cmath.log(z) - 0.5 / z
    p = inv2
    for coeff in _PSI_TAIL:
        acc -= coeff * p
        p *= inv2
    return shift + acc


def polygamma(n: int, x: float) -> float:
    """n-th derivative of psi at real x > 0 (n = 0 gives psi itself)."""
    if n < 0:
        raise DomainError("polygamma order must be >= 0")
    if x <= 0:
        raise DomainError(f"polygamma needs x > 0, got {x}")
    if n == 0:
        return digamma(x).real
    shift = 0.0
    sgn = -1.0 if n % 2 == 0 else 1.0  # sign of (-1)^{n-1}
    nf = math.factorial(n)
    while x < 16.0 + n:
        shift += sgn * nf / x ** (n + 1)
        x += 1.0
    acc = math.factorial(n - 1) / x ** n + nf / (2.0 * x ** (n + 1))
    for k, b2k in enumerate(_BERN_EVEN, start=1):
        num = b2k * math.factorial(2 * k + n - 1) / math.factorial(2 * k)
        acc += num / x ** (2 * k + n)
    return shift + sgn * acc


# --------------------------------------------------------- Gauss nodes ---


@lru_cache(maxsize=8)
def _legendre_rule(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    # Newton iteration on P_n, standard and self-contained
    nodes = []
    weights = []
    for i in range(n):
        x = math.cos(math.pi * (i + 0.75) / (n + 0.5))
        dp = 1.0
        for _ in range(64):
            p0, p1 = 1.0, 0.0
            for j in range(1, n + 1):
                p0, p1 = ((2 * j - 1) * x * p0 - (j - 1) * p1) / j, p0
            dp = n * (x * p0 - p1) / (x * x - 1.0)
            dx = p0 / dp
            x -= dx
            if abs(dx) < 1e-15:
                break
        nodes.append(x)
        weights.append(2.0 / ((1.0 - x * x) * dp * dp))
    return tuple(nodes), tuple(weights)


def _gl_segment(f, a: float, b: float, n: int = 20) -> float:
    nodes, weights = _legendre_rule(n)
    h = 0.5 * (b - a)
    m = 0.5 * (a + b)
    return h * math.fsum(w * f(m + h * x) for x, w in zip(nodes, weights))


# ------------------------------------------------------------- Si / Ci ---

_SI_SPLIT = 12.0


def _si_aux(x: float) -> tuple[float, float]:
    # f = int_0^inf e^{-xt}/(1+t^2) dt and its t-weighted partner
    width = 2.0 / x
    f = 0.0
    g = 0.0
    for p in range(23):
        a = p * width

        def fi(t: float) -> float:
            return math.exp(-x * t) / (1.0 + t * t)

        f += _gl_segment(fi, a, a + width)
        g += _gl_segment(lambda t: fi(t) * t, a, a + width)
    return f, g


def sine_integral(x: float) -> float:
    """Si(x) = int_0^x sin(t)/t dt.  Odd by construction."""
    if x < 0:
        return -sine_integral(-x)
    if x == 0:
        return 0.0
    if x < _SI_SPLIT:
        total = 0.0
        num = x  # (-1)^n x^{2n+1} / (2n+1)!
        n = 0
        while True:
            term = num / (2 * n + 1)
            total += term
            if abs(term) < 1e-18:
                return total
            num *= -x * x / ((2 * n + 2) * (2 * n + 3))
            n += 1
    f, g = _si_aux(x)
    return math.pi / 2 - f * math.cos(x) - g * math.sin(x)


def cosine_integral(x: float) -> float:
    """Ci(x) for x > 0."""
    if x <= 0:
        raise DomainError(f"cosine_integral needs x > 0, got {x}")
    if x < _SI_SPLIT:
        total = EULER_GAMMA + math.log(x)
        num = -x * x / 2.0  # (-1)^n x^{2n} / (2n)!
        n = 1
        while True:
            term = num / (2 * n)
            total += term
            if abs(term) < 1e-18:
                return total
            num *= -x * x / ((2 * n + 1) * (2 * n + 2))
            n += 1
    f, g = _si_aux(x)
    return f * math.sin(x) - g * math.cos(x)


# ------------------------------------------------------------- Fresnel ---


def fresnel_c(x: float) -> float:
    """Fresnel cosine integral int_0^x cos(pi t^2 / 2) dt, x >= 0."""
    if x < 0:
        raise DomainError(f"fresnel_c needs x >= 0, got {x}")
    if x == 0:
        return 0.0
    if x < 2.0:
        a = math.pi * x * x / 2.0
        total = 0.0
        num = 1.0  # (-1)^n a^{2n} / (2n)!
        n = 0
        while True:
            term = x * num / (4 * n + 1)
            total += term
            if abs(term) < 1e-18:
                return total
            num *= -a * a / ((2 * n + 1) * (2 * n + 2))
            n += 1
    # 1/2 minus the tail of cos(pi u/2)/(2 sqrt u) past u = x^2,
    # the tail summed between consecutive zeros (odd u) and accelerated
    u0 = x * x

    def integrand(u: float) -> float:
        return math.cos(math.pi * u / 2.0) / (2.0 * math.sqrt(u))

    z0 = math.ceil(u0)
    if z0 % 2 == 0:
        z0 += 1
    head = _gl_segment(integrand, u0, float(z0)) if z0 > u0 else 0.0
    segs = [_gl_segment(integrand, float(z0 + 2 * m), float(z0 + 2 * m + 2)) for m in range(28)]
    return 0.5 - head - alternating_sum(segs).real


# ----------------------------------------------------------------- erf ---


def erf_real(x: float) -> float:
    """Error function on the real line, abs error <= ~1e-13."""
    if x < 0:
        return -erf_real(-x)
    if x < 2.0:
        total = 0.0
        num = x  # x^{2n+1} (-1)^n / n!
        n = 0
        while True:
            term = num / (2 * n + 1)
            total += term
            if abs(term) < 1e-18:
                return total * 2.0 / math.sqrt(math.pi)
            num *= -x * x / (n + 1)
            n += 1
    if x > 6.5:
        return 1.0
    # Lentz continued fraction for erfc: a_n = n/2, b_n = x
    tiny = 1e-300
    fval = x
    cc = x
    dd = 0.0
    for n in range(1, 400):
        an = n / 2.0
        dd = x + an * dd
        if dd == 0.0:
            dd = tiny
        cc = x + an / cc
        if cc == 0.0:
            cc = tiny
        dd = 1.0 / dd
        delta = cc * dd
        fval *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    else:
        raise ConvergenceError("erfc continued fraction stalled")
    erfc = math.exp(-x * x) / (math.sqrt(math.pi) * fval)
    return 1.0 - erfc


# ------------------------------------------------------------- polylog ---


def polylog(j: int, x: float) -> float:
    """Li_j(x) by the defining series, 0 < x < 1, j >= 1."""
    if j < 1:
        raise DomainError("polylog order must be >= 1")
    if not 0.0 < x < 1.0:
        raise DomainError(f"polylog argument must lie in (0, 1), got {x}")
    total = 0.0
    xn = x
    n = 1
    while True:
        term = xn / n ** j
        total += term
        if term < 1e-17 * abs(total):
            return total
        xn *= x
        n += 1
        if n > 10_000_000:
            raise ConvergenceError("polylog series cap hit")
