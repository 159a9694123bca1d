"""Special-function layer against frozen references and a Stirling oracle."""
import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _frozen as fz
from _oracles import gamma_stirling, simpson
from zetakit.errors import DomainError, PoleError
from zetakit.special import (
    EULER_GAMMA,
    cosine_integral,
    digamma,
    erf_real,
    fresnel_c,
    gamma_complex,
    log_gamma_real,
    polygamma,
    polylog,
    sine_integral,
)


def test_gamma_frozen_points():
    assert gamma_complex(0.5) == pytest.approx(fz.GAMMA_HALF, rel=1e-13)
    assert gamma_complex(-2.5) == pytest.approx(fz.GAMMA_M2_5, rel=1e-12)
    assert gamma_complex(complex(2, 3)) == pytest.approx(fz.GAMMA_2_3I, rel=1e-12)
    assert gamma_complex(complex(7, -9)) == pytest.approx(fz.GAMMA_7_9I, rel=1e-12)


def test_gamma_integers_exact():
    for n in range(1, 12):
        assert gamma_complex(n) == pytest.approx(math.factorial(n - 1), rel=1e-14)


def test_gamma_matches_stirling_oracle():
    pts = [0.3, 1.7, 4.2, complex(0.5, 0.5), complex(-1.3, 2.0), complex(3, -7)]
    for z in pts:
        assert gamma_complex(z) == pytest.approx(gamma_stirling(z), rel=5e-10)


def test_gamma_pole_raises():
    for z in (0, -1, -4):
        with pytest.raises(PoleError):
            gamma_complex(z)


@given(
    st.complex_numbers(
        min_magnitude=0.1, max_magnitude=8.0, allow_nan=False, allow_infinity=False
    )
)
@settings(max_examples=60, deadline=None)
def test_gamma_recurrence(z):
    # Gamma(z+1) = z Gamma(z) away from the poles on the real axis
    if abs(z.imag) < 1e-3 and (z.real <= 0.05 or abs(z.real - round(z.real)) < 1e-3):
        return
    lhs = gamma_complex(z + 1)
    rhs = z * gamma_complex(z)
    assert cmath.isclose(lhs, rhs, rel_tol=1e-10)


def test_log_gamma_real():
    assert log_gamma_real(10.0) == pytest.approx(math.log(math.factorial(9)), rel=1e-14)
    assert log_gamma_real(0.5) == pytest.approx(math.log(fz.GAMMA_HALF), rel=1e-13)
    with pytest.raises(DomainError):
        log_gamma_real(-1.0)


def test_digamma_frozen():
    assert digamma(1.0).real == pytest.approx(fz.DIGAMMA_1, abs=1e-13)
    assert digamma(0.1).real == pytest.approx(fz.DIGAMMA_0_1, rel=1e-13)
    assert digamma(complex(3, 4)) == pytest.approx(fz.DIGAMMA_3_4I, rel=1e-12)
    assert digamma(complex(-2.3, 1.1)) == pytest.approx(fz.DIGAMMA_M2_3_1_1I, rel=1e-12)
    assert digamma(1.0).real == pytest.approx(-EULER_GAMMA, abs=1e-13)


def test_digamma_recurrence():
    for x in (0.3, 2.7, complex(1.5, 2.5)):
        assert digamma(x + 1) == pytest.approx(digamma(x) + 1.0 / x, rel=1e-12)


def test_polygamma_frozen():
    assert polygamma(1, 1.5) == pytest.approx(fz.POLYGAMMA_1_15, rel=1e-12)
    assert polygamma(2, 0.75) == pytest.approx(fz.POLYGAMMA_2_075, rel=1e-12)
    assert polygamma(2, 0.25) == pytest.approx(fz.POLYGAMMA_2_025, rel=1e-12)
    assert polygamma(3, 0.2) == pytest.approx(fz.POLYGAMMA_3_02, rel=1e-12)
    # psi'(1.5) = pi^2/2 - 4
    assert polygamma(1, 1.5) == pytest.approx(math.pi ** 2 / 2 - 4.0, rel=1e-12)


def test_sine_integral_frozen():
    assert sine_integral(1.0) == pytest.approx(fz.SI_1, abs=1e-14)
    assert sine_integral(math.pi) == pytest.approx(fz.SI_PI, abs=1e-14)
    assert sine_integral(math.pi / 2) == pytest.approx(fz.SI_HALFPI, abs=1e-14)
    assert sine_integral(12.5) == pytest.approx(fz.SI_12_5, abs=1e-13)
    assert sine_integral(200.0) == pytest.approx(fz.SI_200, abs=1e-13)


def test_sine_integral_is_the_integral():
    for x in (0.7, 3.0, 9.0):
        direct = simpson(lambda t: math.sin(t) / t if t else 1.0, 1e-12, x, 4000)
        assert sine_integral(x) == pytest.approx(direct, abs=1e-11)


def test_sine_integral_odd():
    for x in (0.5, 2.0, 40.0):
        assert sine_integral(-x) == pytest.approx(-sine_integral(x), abs=1e-15)


def test_cosine_integral_frozen():
    assert cosine_integral(1.0) == pytest.approx(fz.CI_1, abs=1e-14)
    assert cosine_integral(math.pi / 2) == pytest.approx(fz.CI_HALFPI, abs=1e-14)
    assert cosine_integral(150.0) == pytest.approx(fz.CI_150, abs=1e-13)
    assert cosine_integral(0.05) == pytest.approx(fz.CI_0_05, abs=1e-13)
    with pytest.raises(DomainError):
        cosine_integral(-1.0)


def test_fresnel_frozen():
    assert fresnel_c(1.0) == pytest.approx(fz.FRESNEL_C_1, abs=1e-14)
    assert fresnel_c(math.sqrt(7)) == pytest.approx(fz.FRESNEL_C_SQRT7, abs=1e-13)
    assert fresnel_c(90.0) == pytest.approx(fz.FRESNEL_C_90, abs=1e-13)


def test_fresnel_is_the_integral():
    for x in (0.6, 1.8):
        direct = simpson(lambda t: math.cos(math.pi * t * t / 2.0), 0.0, x, 4000)
        assert fresnel_c(x) == pytest.approx(direct, abs=1e-12)


def test_erf_frozen_and_odd():
    assert erf_real(1.0) == pytest.approx(fz.ERF_1, abs=1e-14)
    assert erf_real(3.3) == pytest.approx(fz.ERF_3_3, abs=1e-14)
    assert erf_real(-1.0) == pytest.approx(-fz.ERF_1, abs=1e-14)
    assert erf_real(0.0) == 0.0


def test_polylog_frozen():
    assert polylog(2, 0.5) == pytest.approx(fz.LI2_HALF, abs=1e-14)
    assert polylog(5, math.exp(-math.pi)) == pytest.approx(fz.LI5_EXP_MPI, abs=1e-15)


@given(st.floats(min_value=0.02, max_value=0.98))
@settings(max_examples=40, deadline=None)
def test_polylog_reflection(x):
    # Li_2(x) + Li_2(1-x) + ln(x) ln(1-x) = pi^2/6
    lhs = polylog(2, x) + polylog(2, 1.0 - x) + math.log(x) * math.log1p(-x)
    assert lhs == pytest.approx(math.pi ** 2 / 6.0, abs=1e-12)


def test_polylog_domain():
    with pytest.raises(DomainError):
        polylog(2, -0.5)
    with pytest.raises(DomainError):
        polylog(0, 0.5)
