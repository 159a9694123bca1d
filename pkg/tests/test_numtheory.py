"""Exact rational identities, held against two independent oracles."""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import (
    akiyama_tanigawa_table,
    bernoulli_table,
    euler_number_table,
    euler_polynomial_table,
    harmonic_direct,
)
from zetakit.errors import TableCapError
from zetakit.numtheory import (
    bernoulli,
    bernoulli_from_euler,
    bernoulli_via_even_recursion,
    euler_bernoulli_harmonic_sides,
    euler_gamma_coefficient,
    euler_gamma_ratio_sides,
    euler_harmonic_bernoulli_sides,
    euler_number,
    euler_number_asymptotic,
    euler_number_via_harmonic_recursion,
    euler_polynomial,
    euler_polynomial_coefficients,
    euler_triangle_sum,
    harmonic,
    tables,
)

ORACLE_B = bernoulli_table(40)
ORACLE_E = euler_number_table(40)


def test_bernoulli_against_both_oracles():
    assert [bernoulli(n) for n in range(41)] == ORACLE_B
    assert ORACLE_B == akiyama_tanigawa_table(40)


def test_bernoulli_sign_convention():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 10))


def test_euler_numbers_against_oracle():
    assert [euler_number(n) for n in range(41)] == ORACLE_E
    assert [int(euler_number(n)) for n in (0, 2, 4, 6, 8)] == [1, -1, 5, -61, 1385]


@given(st.integers(min_value=0, max_value=60))
@settings(max_examples=30, deadline=None)
def test_harmonic_is_the_partial_sum(n):
    assert harmonic(n) == harmonic_direct(n)


def test_index_cap_enforced():
    with pytest.raises(TableCapError):
        bernoulli(257)
    with pytest.raises(ValueError):
        euler_number(-1)


def test_tables_snapshot():
    t = tables(16)
    assert t.bernoulli[12] == Fraction(-691, 2730)
    assert t.euler[6] == -61
    assert t.harmonic[4] == Fraction(25, 12)


def test_euler_polynomial_coefficients_match_recurrence_oracle():
    oracle = euler_polynomial_table(12)
    for n in range(13):
        assert list(euler_polynomial_coefficients(n)) == oracle[n]


def test_euler_polynomial_evaluation():
    # P_3(z) = z^3 - 3 z^2/2 + 1/4 at a rational point, exactly
    z = Fraction(1, 3)
    assert euler_polynomial(3, z) == z ** 3 - Fraction(3, 2) * z ** 2 + Fraction(1, 4)


def test_euler_number_is_scaled_half_value():
    for m in range(0, 8):
        val = euler_polynomial(2 * m, Fraction(1, 2)) * Fraction(2) ** (2 * m)
        assert val == euler_number(2 * m)


def test_triangle_sum_vanishes():
    for m in range(1, 21):
        assert euler_triangle_sum(m) == 0


def test_bernoulli_from_euler():
    for n in range(1, 11):
        assert bernoulli_from_euler(n) == bernoulli(2 * n)


def test_even_recursion_reproduces_bernoulli():
    for n_half in range(0, 11):
        assert bernoulli_via_even_recursion(n_half) == bernoulli(2 * n_half + 2)


def test_harmonic_recursion_reproduces_euler():
    for m in range(1, 9):
        assert euler_number_via_harmonic_recursion(m) == euler_number(2 * m)


def test_harmonic_weighted_sides_agree():
    for m in range(1, 16):
        lhs, rhs = euler_bernoulli_harmonic_sides(m)
        assert lhs == rhs
        lhs2, rhs2 = euler_harmonic_bernoulli_sides(m)
        assert lhs2 == rhs2


def test_gamma_coefficient_cancels():
    for m in range(1, 11):
        assert euler_gamma_coefficient(m) == 0


def test_gamma_ratio_sides():
    for s in (0.7, 2.3, complex(1.1, 0.6)):
        for n in (2, 5):
            lhs, rhs = euler_gamma_ratio_sides(s, n)
            assert lhs == pytest.approx(rhs, rel=1e-11)


def test_asymptotic_size_estimate():
    # leading term of the even Euler growth law, within a percent by n = 20
    est = euler_number_asymptotic(20, 3)
    exact = abs(float(euler_number(20)))
    assert est == pytest.approx(exact, rel=1e-2)


def test_asymptotic_improves_with_terms():
    exact = abs(float(euler_number(16)))
    e1 = abs(euler_number_asymptotic(16, 1) - exact)
    e3 = abs(euler_number_asymptotic(16, 3) - exact)
    assert e3 < e1
