"""Gamma family and Gauss hypergeometric evaluators.

Extended-precision oracles come from mpmath; finite differences cross-check
the parameter-shift derivative.
"""
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hprofile.specfun import (Hyp2F1ConvergenceError, Hyp2F1Params, gamma_fn,
                              gauss_value_at_one, hyp2f1, hyp2f1_auto,
                              hyp2f1_dz, hyp2f1_near_one, ln_gamma, pochhammer,
                              recip_gamma)

mpmath.mp.dps = 50


# --- ln_gamma ---------------------------------------------------------------

def test_ln_gamma_at_one_is_zero():
    assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-15)


def test_ln_gamma_half_is_log_sqrt_pi():
    assert ln_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-14)


def test_ln_gamma_six_is_log_120():
    assert ln_gamma(6.0) == pytest.approx(math.log(120.0), rel=1e-14)


def test_ln_gamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        ln_gamma(0.0)
    with pytest.raises(ValueError):
        ln_gamma(-2.5)


@pytest.mark.parametrize("x", [0.5, 0.73, 1.0, 2.31, 5.5, 10.0, 41.7, 100.0])
def test_ln_gamma_against_extended_precision(x):
    exact = float(mpmath.loggamma(x))
    assert ln_gamma(x) == pytest.approx(exact, rel=1e-13, abs=1e-14)


@given(st.floats(min_value=0.5, max_value=20.0))
@settings(max_examples=60, deadline=None)
def test_ln_gamma_recurrence(x):
    lhs = math.exp(ln_gamma(x + 1.0))
    rhs = x * math.exp(ln_gamma(x))
    assert lhs == pytest.approx(rhs, rel=1e-13)


# --- recip_gamma ------------------------------------------------------------

@pytest.mark.parametrize("x", [0, -1, -2, -3, -17, -50])
def test_recip_gamma_exact_zero_at_nonpositive_integers(x):
    assert recip_gamma(float(x)) == 0.0


def test_recip_gamma_at_2_5():
    # Gamma(2.5) = 1.5 * 0.5 * sqrt(pi) by the recurrence from Gamma(1/2)
    assert recip_gamma(2.5) == pytest.approx(1.0 / (1.5 * 0.5 * math.sqrt(math.pi)),
                                             rel=1e-13)


@pytest.mark.parametrize("x", [-49.5, -20.25, -7.9, -0.5, 0.25, 1.0, 3.7, 50.0])
def test_recip_gamma_against_extended_precision(x):
    exact = float(mpmath.rgamma(x))
    assert recip_gamma(x) == pytest.approx(exact, rel=1e-12)


def test_recip_gamma_smooth_through_zeros():
    # near a pole of Gamma the reciprocal passes through zero linearly
    eps = 1e-7
    left = recip_gamma(-3.0 - eps)
    right = recip_gamma(-3.0 + eps)
    assert left * right < 0.0
    assert abs(left + right) < 1e-3 * abs(left - right)


# --- pochhammer -------------------------------------------------------------

@given(st.floats(min_value=-10, max_value=10))
@settings(max_examples=40, deadline=None)
def test_pochhammer_empty_product(d):
    assert pochhammer(d, 0) == 1.0


def test_pochhammer_hits_zero():
    assert pochhammer(-1.0, 2) == 0.0


def test_pochhammer_half_integer():
    assert pochhammer(0.5, 3) == pytest.approx(1.875, abs=0.0)


@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=30))
@settings(max_examples=60, deadline=None)
def test_pochhammer_matches_gamma_ratio(d, k):
    exact = float(mpmath.rf(d, k))
    assert pochhammer(float(d), k) == pytest.approx(exact, rel=1e-13)


# --- parameter validation ---------------------------------------------------

def test_params_reject_pole_before_termination():
    with pytest.raises(ValueError):
        Hyp2F1Params(0.5, 1.5, -2.0)


def test_params_allow_terminating_before_pole():
    p = Hyp2F1Params(-1.0, 1.5, -2.0)
    assert p.terminating_index() == 1


def test_terminating_index_picks_smaller_magnitude():
    assert Hyp2F1Params(-5.0, -2.0, 1.5).terminating_index() == 2
    assert Hyp2F1Params(-0.5, 3.0, 1.5).terminating_index() is None


# --- hyp2f1 series ----------------------------------------------------------

def test_series_at_origin_is_one():
    for p in (Hyp2F1Params(-1, 2, 1.5), Hyp2F1Params(0.3, 0.7, 1.1)):
        assert hyp2f1(p, 0.0) == 1.0


def test_second_mode_polynomial():
    # F(-1, 2; 3/2; x) = 1 - (4/3) x, proportional to (3 - 4x)
    p = Hyp2F1Params(-1.0, 2.0, 1.5)
    for x in (0.0, 0.2, 0.64, 0.9):
        assert hyp2f1(p, x) == pytest.approx(1.0 - 4.0 * x / 3.0, rel=1e-14)


def test_binomial_identity_sqrt():
    # F(-1/2, 3/2; 3/2; x) = (1 - x)^{1/2}
    p = Hyp2F1Params(-0.5, 1.5, 1.5)
    for x in (0.0, 0.1, 0.3, 0.49):
        assert hyp2f1(p, x) == pytest.approx(math.sqrt(1.0 - x), rel=1e-12)


def test_terminating_sum_matches_extended_precision_brute_force():
    # tolerance scales with the summation condition number sum|t_k| / |sum t_k|
    for m in range(1, 11):
        p = Hyp2F1Params(-float(m), float(m) + 1.0, 1.5)
        for x in (0.1, 0.5, 0.97):
            acc = mpmath.mpf(0)
            mag = mpmath.mpf(0)
            for k in range(m + 1):
                term = (mpmath.rf(p.a, k) * mpmath.rf(p.b, k)
                        / (mpmath.factorial(k) * mpmath.rf(p.c, k))
                        * mpmath.mpf(x) ** k)
                acc += term
                mag += abs(term)
            bound = 1e-14 * float(max(mag, abs(acc)))
            assert abs(hyp2f1(p, x) - float(acc)) <= bound


@given(st.floats(min_value=-3.2, max_value=3.2),
       st.floats(min_value=-3.2, max_value=3.2),
       st.floats(min_value=0.6, max_value=4.0),
       st.sampled_from([0.1, 0.3, 0.7]))
@settings(max_examples=50, deadline=None)
def test_series_symmetric_in_a_b(a, b, c, x):
    lhs = hyp2f1(Hyp2F1Params(a, b, c), x)
    rhs = hyp2f1(Hyp2F1Params(b, a, c), x)
    assert lhs == pytest.approx(rhs, rel=1e-13, abs=1e-13)


def test_series_domain_error_outside_unit_interval():
    p = Hyp2F1Params(0.3, 0.7, 1.1)
    with pytest.raises(ValueError):
        hyp2f1(p, 1.0)
    with pytest.raises(ValueError):
        hyp2f1(p, -0.2)


def test_series_budget_exhaustion_raises():
    # x extremely close to 1 cannot meet tolerance within the budget
    p = Hyp2F1Params(0.5, 1.0, 1.5)
    with pytest.raises(Hyp2F1ConvergenceError):
        hyp2f1(p, 1.0 - 1e-12)


# --- connection formula -----------------------------------------------------

def test_near_one_terminating_bypass():
    p = Hyp2F1Params(-1.0, 2.0, 1.5)
    assert hyp2f1_near_one(p, 0.9) == hyp2f1(p, 0.9)


def test_near_one_sqrt_closed_form():
    p = Hyp2F1Params(-0.5, 1.5, 1.5)
    assert hyp2f1_near_one(p, 0.99) == pytest.approx(math.sqrt(0.01), rel=1e-12)


def test_branch_continuity_at_switch():
    p = Hyp2F1Params(-0.5, 2.5, 2.5)  # = (1-x)^{1/2}, non-terminating path
    for eps in (1e-4, 1e-6, 1e-8):
        lo = hyp2f1(p, 0.5 - eps)
        hi = hyp2f1_near_one(p, 0.5 + eps)
        assert abs(lo - hi) <= 1e-10 + 4.0 * eps


@pytest.mark.parametrize("n", [1, 2])
def test_near_one_limit_matches_gauss_value(n):
    # c - a - b = 1/2 family: the x -> 1 limit equals the Gamma-quotient value.
    # The approach is O(sqrt(1-x)), so the sqrt term is eliminated by the
    # two-point extrapolation 2 F(1-y/4) - F(1-y) before comparing.
    lam = 7.3  # generic non-eigenvalue
    s = math.sqrt(n * n + lam)
    p = Hyp2F1Params((n - s) / 2.0, (n + s) / 2.0, n + 0.5)
    limit = gauss_value_at_one(p)
    assert hyp2f1_near_one(p, 1.0) == pytest.approx(limit, rel=1e-13)
    y = 1e-9
    extrap = 2.0 * hyp2f1_near_one(p, 1.0 - y / 4.0) - hyp2f1_near_one(p, 1.0 - y)
    assert extrap == pytest.approx(limit, abs=1e-9)


@pytest.mark.parametrize("x", [0.55, 0.75, 0.95])
def test_connection_formula_against_mpmath(x):
    p = Hyp2F1Params(-0.7, 1.9, 1.7)
    exact = float(mpmath.hyp2f1(p.a, p.b, p.c, x))
    assert hyp2f1_near_one(p, x) == pytest.approx(exact, rel=1e-12)


# --- derivative -------------------------------------------------------------

def test_dz_at_origin_is_ab_over_c():
    p = Hyp2F1Params(0.4, 1.2, 2.2)
    assert hyp2f1_dz(p, 0.0) == pytest.approx(0.4 * 1.2 / 2.2, rel=1e-14)


def test_dz_of_linear_polynomial_is_constant():
    p = Hyp2F1Params(-1.0, 2.0, 1.5)
    for x in (0.0, 0.4, 0.8):
        assert hyp2f1_dz(p, x) == pytest.approx(-4.0 / 3.0, rel=1e-14)


def test_dz_of_sqrt():
    p = Hyp2F1Params(-0.5, 1.5, 1.5)
    for x in (0.1, 0.6):
        assert hyp2f1_dz(p, x) == pytest.approx(-0.5 / math.sqrt(1.0 - x), rel=1e-11)


def test_dz_matches_central_differences():
    p = Hyp2F1Params(0.3, 1.1, 1.8)
    h = 1e-6
    for x in (0.1, 0.35, 0.62):
        fd = (hyp2f1_auto(p, x + h) - hyp2f1_auto(p, x - h)) / (2.0 * h)
        assert hyp2f1_dz(p, x) == pytest.approx(fd, abs=1e-6)


# --- value at one -----------------------------------------------------------

def test_gauss_value_zero_when_c_equals_b():
    for n in (1, 2, 3):
        p = Hyp2F1Params(-0.5, n + 0.5, n + 0.5)
        assert gauss_value_at_one(p) == 0.0


def test_gauss_value_terminating_example():
    # 1 - 4/3 at x = 1
    assert gauss_value_at_one(Hyp2F1Params(-1.0, 2.0, 1.5)) == pytest.approx(
        -1.0 / 3.0, rel=1e-13)


def test_gauss_value_zero_at_odd_eigenparameters():
    # gamma - b = -m at the odd eigenvalues
    n = 1
    lam = 15.0  # m = 1
    s = math.sqrt(n * n + lam)
    p = Hyp2F1Params((n - s) / 2.0, (n + s) / 2.0, n + 0.5)
    assert gauss_value_at_one(p) == 0.0


def test_gauss_value_domain_error():
    with pytest.raises(ValueError):
        gauss_value_at_one(Hyp2F1Params(1.0, 1.0, 1.5))
