"""Contour representations, the zeta split, the critical-line system, and
the closed-form integral registry."""
import math

import pytest

import _frozen as fz
from _oracles import eta_euler_maclaurin, zeta_oracle
from zetakit.errors import DomainError, PathError, PoleError
from zetakit.paths import (
    PATH_KINDS,
    REGISTRY,
    IdentityCase,
    PathSpec,
    critical_line_system,
    eta_minus,
    eta_plus,
    euler_polynomial_integral,
    half_arc_integral,
    path_circle,
    path_double_circle,
    path_four_lines,
    path_integral_eta,
    path_two_lines,
    registry_ids,
    run_identity_registry,
    sum_expint_halfodd,
    zeta_minus,
    zeta_plus,
)
from zetakit.series import zeta_ref

BUILDERS = (path_circle, path_double_circle, path_two_lines, path_four_lines)


# ------------------------------------------------------------------ paths --


def test_builders_cover_the_kinds():
    # the final kind is reserved for hand-built specs
    assert tuple(b().kind for b in BUILDERS) == PATH_KINDS[:4]
    assert PATH_KINDS[4] == "custom"


def test_path_endpoints_pinned():
    for b in BUILDERS:
        spec = b()
        v0, _, a0, _ = spec.legs[0]
        vn, _, _, bn = spec.legs[-1]
        assert abs(v0(a0) - (-1j)) < 1e-9
        assert abs(vn(bn) - 1j) < 1e-9


def test_path_validation_rejects_bad_endpoints():
    with pytest.raises(PathError):
        PathSpec(
            kind="unit-half-circle",
            legs=((lambda t: complex(math.cos(t), math.sin(t)), lambda t: complex(-math.sin(t), math.cos(t)), -math.pi / 2, 0.0),),
            junction=1.0,
        )


def test_path_validation_rejects_kernel_zero_crossing():
    # a straight segment from -i to i passes through the origin pole
    with pytest.raises(PathError):
        PathSpec(
            kind="axis-parallel",
            legs=((lambda t: 1j * t, lambda t: 1j, -1.0, 1.0),),
            junction=0.0,
        )


def test_path_independence():
    for s in (0.0, 0.5, 2.0, complex(-1.3, 2.0), complex(0.5, 3.0)):
        vals = [path_integral_eta(s, b(), 1e-10) for b in BUILDERS]
        ref = eta_euler_maclaurin(s)
        for v in vals:
            assert v == pytest.approx(ref, abs=1e-8), s
        spread = max(abs(v - vals[0]) for v in vals)
        assert spread < 5e-10, s


def test_default_path_is_the_circle():
    assert path_integral_eta(0.5) == pytest.approx(fz.ETA_HALF, abs=1e-9)


# --------------------------------------------------------------- the sums --


def test_halfodd_sum_frozen_values():
    assert sum_expint_halfodd(1.0).value.real == pytest.approx(fz.SUM_ES_1, abs=1e-11)
    assert sum_expint_halfodd(0.5).value.real == pytest.approx(
        fz.SUM_ES_HALF, abs=1e-11
    )
    assert sum_expint_halfodd(0.0).value.real == pytest.approx(fz.SUM_ES_0, abs=1e-11)
    assert sum_expint_halfodd(-3.0).value.real == pytest.approx(
        fz.SUM_ES_M3, abs=1e-10
    )


def test_halfodd_sum_estimate_covers_error():
    r = sum_expint_halfodd(0.5)
    assert abs(r.value.real - fz.SUM_ES_HALF) <= max(r.abs_error_estimate, 1e-12)


# ---------------------------------------------------------------- the split --


def test_split_frozen_values():
    assert zeta_minus(0.5).real == pytest.approx(fz.ZETA_MINUS_HALF, abs=1e-9)
    assert zeta_plus(0.5).real == pytest.approx(fz.ZETA_PLUS_HALF, abs=1e-10)
    assert zeta_minus(1.7).real == pytest.approx(fz.ZETA_MINUS_1_7, abs=1e-9)
    assert zeta_minus(-1.5).real == pytest.approx(fz.ZETA_MINUS_M1_5, abs=1e-9)
    assert zeta_plus(-1.5).real == pytest.approx(fz.ZETA_PLUS_M1_5, abs=1e-10)


def test_split_adds_to_zeta():
    for s in (0.5, -0.4, complex(1.3, 1.1), complex(0.5, 2.0)):
        total = zeta_minus(s) + zeta_plus(s)
        assert total == pytest.approx(zeta_oracle(s), abs=1e-9), s


def test_split_at_zero():
    assert zeta_minus(0.0) == pytest.approx(-0.5, abs=1e-10)
    assert abs(zeta_plus(0.0)) < 1e-10


def test_split_guards():
    with pytest.raises(DomainError):
        eta_minus(2.5)
    with pytest.raises(DomainError):
        zeta_minus(complex(2.0, 1.0))
    with pytest.raises(PoleError):
        zeta_minus(1.0)
    with pytest.raises(PoleError):
        zeta_plus(1.0)


def test_half_arc_relation():
    # the lower half-arc integral equals 2^{1-s} times the subtracted head
    for s in (0.5, -0.8, complex(0.3, 1.0)):
        lhs = half_arc_integral(s)
        rhs = complex(2.0) ** (1.0 - complex(s)) * eta_minus(s)
        assert lhs == pytest.approx(rhs, abs=1e-9), s


def test_eta_plus_tail_identity():
    s = 0.7
    direct = eta_plus(s)
    expected = -(2.0 ** s) * math.sin(math.pi * s / 2.0) * sum_expint_halfodd(s).value
    assert direct == pytest.approx(expected, abs=1e-11)


# ------------------------------------------------------------ critical line --


def test_critical_line_float64_heights():
    for t, frozen in ((2.0, fz.ZETA_0_5_2I), (5.0, fz.ZETA_0_5_5I)):
        sysr = critical_line_system(t, 1e-9)
        assert sysr.zeta == pytest.approx(frozen, abs=1e-9)
        assert sysr.zeta == pytest.approx(sysr.zeta_minus + sysr.zeta_plus, abs=1e-14)
        assert sysr.working_digits == 16


def test_critical_line_zero_height():
    sysr = critical_line_system(0.0, 1e-10)
    assert sysr.zeta.real == pytest.approx(fz.ZETA_HALF, abs=1e-10)
    assert abs(sysr.zeta.imag) < 1e-10
    assert sysr.j1 == pytest.approx(0.0, abs=1e-12)


def test_critical_line_first_zero_needs_bignum():
    sysr = critical_line_system(14.134725, 1e-9)
    assert sysr.working_digits > 16
    assert sysr.zeta == pytest.approx(fz.ZETA_0_5_14I, abs=1e-8)
    assert abs(sysr.zeta) < 2e-7  # this is (nearly) the first zero


def test_critical_line_symmetry_in_t():
    up = critical_line_system(3.0, 1e-9)
    down = critical_line_system(-3.0, 1e-9)
    assert down.zeta == pytest.approx(up.zeta.conjugate(), abs=1e-10)


def test_critical_line_height_cap():
    with pytest.raises(DomainError):
        critical_line_system(61.0)


# ---------------------------------------------------------------- registry --


def test_registry_ids_sorted_unique():
    ids = registry_ids()
    assert ids == sorted(ids)
    assert len(ids) == len(set(ids))
    assert len(ids) == len(REGISTRY) == 47


def test_identity_case_tolerance_window():
    with pytest.raises(ValueError):
        IdentityCase(
            id="x", label="x", lhs=lambda: 0.0, rhs=lambda: 0.0, tolerance=1e-3
        )


def test_registry_all_pass():
    records = run_identity_registry()
    assert len(records) == 47
    bad = [r for r in records if not r.passed]
    assert bad == [], [(r.id, r.abs_diff, r.error) for r in bad]
    assert all(r.error is None for r in records)


def test_registry_pattern_filter():
    recs = run_identity_registry("line_*")
    assert recs and all(r.id.startswith("line_") for r in recs)
    assert run_identity_registry("zzz_no_match") == []


def test_registry_tolerance_override_is_applied():
    # circle_algebraic sits on a ~5e-9 quadrature floor; 1e-12 must fail it
    recs = run_identity_registry("circle_algebraic", tol_override=1e-12)
    assert len(recs) == 1
    assert recs[0].tolerance == 1e-12
    assert not recs[0].passed
    assert recs[0].error is None


def test_euler_polynomial_integral_is_the_rational_harmonic_sum():
    # the integral evaluates to an exact rational; build it from the oracle
    # tables: -sum_j E_{2j} H_{2m-2j} / ((2j)! (2m-2j)!)
    from fractions import Fraction

    from _oracles import euler_number_table, harmonic_direct

    E = euler_number_table(8)
    for m in (1, 2, 3):
        want = -sum(
            E[2 * j]
            * harmonic_direct(2 * m - 2 * j)
            / (math.factorial(2 * j) * math.factorial(2 * m - 2 * j))
            for j in range(m)
        )
        assert euler_polynomial_integral(m) == pytest.approx(
            float(want), abs=1e-10
        ), m
