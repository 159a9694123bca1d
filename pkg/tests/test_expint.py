"""The generalized exponential-integral family."""
import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import _frozen as fz
from _oracles import simpson
from zetakit.errors import DomainError
from zetakit.expint import (
    ExpIntRequest,
    evaluate,
    expint_conjugate_pair,
    expint_e,
    expint_negint,
    expint_order_derivative,
    expint_pair_derivative,
    expint_step_up,
    half_odd_pi,
)
from zetakit.special import erf_real


def test_half_odd_pi():
    assert half_odd_pi(0) == pytest.approx(math.pi / 2, abs=0)
    assert half_odd_pi(3) == pytest.approx(3.5 * math.pi, abs=0)


def test_frozen_values():
    assert expint_e(1, 1.0) == pytest.approx(fz.E1_1, rel=1e-12)
    assert expint_e(1, 0.5j * math.pi) == pytest.approx(fz.E1_I_HALFPI, rel=1e-11)
    assert expint_e(2.5, 0.5j * math.pi) == pytest.approx(
        fz.E_2_5_I_HALFPI, rel=1e-11
    )
    assert expint_e(0.7, 1.5j * math.pi) == pytest.approx(
        fz.E_0_7_I_3HALFPI, rel=1e-11
    )
    assert expint_e(complex(-1.3, 2.0), 40.0) == pytest.approx(
        fz.E_M1_3_2I_40, rel=1e-10
    )


def test_is_the_defining_integral():
    # direct Simpson on v^{-s} e^{-zv} over [1, cut]
    for s, z in ((1.5, 2.0), (0.3, 1.0), (-0.7, 3.0)):
        direct = simpson(lambda v: v ** -s * math.exp(-z * v), 1.0, 40.0, 20000)
        assert expint_e(s, z).real == pytest.approx(direct, rel=1e-9)


def test_half_order_erf_form():
    for z in (0.5, 2.0, 7.0):
        closed = math.sqrt(math.pi / z) * (1.0 - erf_real(math.sqrt(z)))
        assert expint_e(0.5, z).real == pytest.approx(closed, rel=1e-11)
    assert expint_e(0.5, 2.0).real == pytest.approx(fz.E_HALF_2, rel=1e-12)


def test_negative_integer_orders_are_exact():
    z = complex(1.3, 0.4)
    m = 2
    explicit = (
        math.factorial(m)
        * cmath.exp(-z)
        * z ** (-m - 1)
        * (1.0 + z + z * z / 2.0)
    )
    assert expint_negint(m, z) == pytest.approx(explicit, rel=1e-14)
    assert expint_e(-m, z) == pytest.approx(explicit, rel=1e-14)


def test_asymptotic_and_ray_branches_agree():
    # straddle the large-argument switch
    for z in (28.0, 31.0, 55.0):
        direct = simpson(lambda v: v ** -1.7 * math.exp(-z * v), 1.0, 4.0, 20000)
        assert expint_e(1.7, z).real == pytest.approx(direct, rel=1e-8)


def test_domain_guards():
    with pytest.raises(DomainError):
        expint_e(1.0, 0.0)
    with pytest.raises(DomainError):
        expint_e(1.0, complex(-0.5, 1.0))
    with pytest.raises(DomainError):
        expint_step_up(1.0, 2.0, 0.1)


@given(
    st.floats(min_value=-3.0, max_value=4.0),
    st.floats(min_value=0.4, max_value=6.0),
)
@settings(max_examples=40, deadline=None)
def test_order_recursion_property(s, z):
    # E_{s+1}(z) = (e^{-z} - z E_s(z)) / s  restated through expint_step_up
    if abs(s) < 0.05:
        return
    below = expint_e(s, z, 1e-13)
    stepped = expint_step_up(s + 1.0, z, below)
    assert stepped == pytest.approx(expint_e(s + 1.0, z, 1e-13), rel=2e-10, abs=1e-13)


def test_conjugate_pair_matches_two_evaluations():
    for k, order in ((0, 1.5), (2, 0.5), (1, complex(1.2, 0.8))):
        z = 1j * half_odd_pi(k)
        up = expint_e(order, z, 1e-13)
        down = expint_e(order, -z, 1e-13)
        assert expint_conjugate_pair(k, order, 1) == pytest.approx(
            up + down, abs=1e-12
        )
        assert expint_conjugate_pair(k, order, -1) == pytest.approx(
            up - down, abs=1e-12
        )


def test_conjugate_pair_realness_for_real_order():
    pair = expint_conjugate_pair(1, 2.0, 1)
    assert pair.imag == 0.0
    anti = expint_conjugate_pair(1, 2.0, -1)
    assert anti.real == 0.0


def test_order_derivative_frozen():
    assert expint_order_derivative(2.5, math.pi / 2, 1).real == pytest.approx(
        fz.E1DERIV_2_5_HALFPI, rel=1e-8
    )
    assert expint_order_derivative(1.5, 0.5j * math.pi, 1) == pytest.approx(
        fz.E1DERIV_1_5_I_HALFPI, rel=1e-8
    )


def test_order_derivative_is_the_log_weighted_integral():
    # -dE_s/ds = integral of ln(v) v^{-s} e^{-zv}
    s, z = 2.0, 1.5
    direct = simpson(
        lambda v: math.log(v) * v ** -s * math.exp(-z * v), 1.0, 45.0, 20000
    )
    assert expint_order_derivative(s, z, 1).real == pytest.approx(direct, rel=1e-7)


def test_second_derivative_scaled():
    # level 2 returns (1/2) d2E/ds2 = integral of (ln v)^2/2 v^{-s} e^{-zv}
    s, z = 1.3, 2.0
    direct = simpson(
        lambda v: 0.5 * math.log(v) ** 2 * v ** -s * math.exp(-z * v),
        1.0,
        45.0,
        20000,
    )
    assert expint_order_derivative(s, z, 2).real == pytest.approx(direct, rel=1e-5)


def test_pair_derivative_matches_two_sided():
    k, order = 0, 2.5
    z = 1j * half_odd_pi(k)
    up = expint_order_derivative(order, z, 1)
    down = expint_order_derivative(order, -z, 1)
    assert expint_pair_derivative(k, order, 1) == pytest.approx(up + down, abs=1e-9)


def test_request_validation_and_dispatch():
    req = ExpIntRequest(order=1.0, argument=1.0)
    assert evaluate(req) == pytest.approx(fz.E1_1, rel=1e-11)
    req_d = ExpIntRequest(order=2.5, argument=math.pi / 2, derivative_level=1)
    assert evaluate(req_d).real == pytest.approx(fz.E1DERIV_2_5_HALFPI, rel=1e-7)
    with pytest.raises(ValueError):
        ExpIntRequest(order=1.0, argument=1.0, derivative_level=7)
    with pytest.raises(DomainError):
        ExpIntRequest(order=1.0, argument=0.0)
    with pytest.raises(DomainError):
        ExpIntRequest(order=1.0, argument=complex(-1.0, 0.0))
