import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from besselsum.errors import ConvergenceError, DomainError, PoleError
from besselsum.special import (bessel_j, bessel_j_half_integer, bessel_j_scaled,
                               bessel_j_series, gamma, gegenbauer,
                               gegenbauer_quadratic_form, hyp2f1, pochhammer, rgamma)


def rel(x, ref):
    return abs(x - ref) / abs(ref)


# -- gamma / pochhammer ------------------------------------------------------

def test_gamma_examples():
    assert gamma(5) == 24
    assert gamma(0.5) == pytest.approx(1.7724538509055160, rel=1e-15)
    assert gamma(2.5) / gamma(3.5) == pytest.approx(0.4, rel=1e-15)


@pytest.mark.parametrize("x", [-30.5, -7.25, -0.5, 0.1, 1.0, 3.7, 50.5, 169.9])
def test_gamma_accuracy(x):
    assert rel(gamma(x), float(mpmath.gamma(x))) < 1e-13


@pytest.mark.parametrize("x", [0, -1, -2.0, -29])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)
    assert rgamma(x) == 0.0


def test_pochhammer_examples():
    assert pochhammer(3, 0) == 1
    assert pochhammer(0.5, 3) == 1.875
    assert pochhammer(-2, 4) == 0


@given(st.floats(-20, 20), st.integers(0, 12))
def test_pochhammer_gamma_ratio(u, k):
    ref = mpmath.rf(u, k)
    assert abs(pochhammer(u, k) - float(ref)) <= 1e-12 * max(1.0, abs(float(ref)))


# -- Bessel J ----------------------------------------------------------------

def test_bessel_half_pi():
    assert bessel_j(0.5, math.pi / 2) == pytest.approx(0.6366197723675814, rel=1e-15)
    assert bessel_j_series(0.5, math.pi / 2) == pytest.approx(2 / math.pi, rel=1e-14)


def test_bessel_zero_argument():
    assert bessel_j(2.5, 0) == 0.0
    assert bessel_j(0, 0) == 1.0
    with pytest.raises(DomainError):
        bessel_j(-0.5, 0.0)


def test_bessel_five_halves_at_one():
    closed = math.sqrt(2 / math.pi) * (2 * math.sin(1) - 3 * math.cos(1))
    assert rel(bessel_j(2.5, 1.0), closed) < 1e-12
    assert rel(bessel_j_series(2.5, 1.0), closed) < 1e-12


def test_bessel_domain_errors():
    with pytest.raises(DomainError):
        bessel_j(1.0, -0.1)
    with pytest.raises(DomainError):
        bessel_j(-1.0, 1.0)
    with pytest.raises(DomainError):
        bessel_j(float("nan"), 1.0)


@settings(max_examples=400, deadline=None)
@given(st.floats(0.0, 40.0), st.floats(0.01, 1.0))
def test_bessel_against_mpmath(nu, u):
    z = 0.01 + u * 50 * (1 + nu)
    ref = float(mpmath.besselj(nu, z))
    # relative 1e-12, plus the argument-conditioning floor z eps |J'| near zeros
    env = math.sqrt(2 / (math.pi * z)) if z > nu else 0.0
    assert abs(bessel_j(nu, z) - ref) <= 1e-12 * abs(ref) + 4 * 2.2e-16 * z * env


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 8), st.floats(0.0, 1.0))
def test_branch_agreement_half_integer(n, u):
    # closed trig form vs the power series summed in rational arithmetic,
    # over the part of (0, 40) where the closed form is used
    nu = n + 0.5
    lo = max(1.0, n, n * n / 8.0)
    z = lo + u * (40.0 - lo)
    closed = bessel_j_half_integer(nu, z)
    series = bessel_j_series(nu, z, exact=True)
    assert abs(closed - series) <= 1e-10 * max(abs(series), 1e-3 / math.sqrt(z))


@settings(max_examples=100, deadline=None)
@given(st.floats(0.0, 10.0), st.floats(1.0, 12.0))
def test_branch_agreement_series_vs_miller(nu, z):
    from besselsum.special import _miller
    series = bessel_j_series(nu, z, exact=True)
    assert abs(_miller(nu, z) - series) <= 1e-10 * max(abs(series), 1e-3)


def test_bessel_scaled_examples():
    assert bessel_j_scaled(0.5, 0) == pytest.approx(1.1283791670955126, rel=1e-15)
    assert bessel_j_scaled(0, 0) == 1.0
    assert rel(bessel_j_scaled(2.5, 0.3), bessel_j(2.5, 0.3) / 0.15 ** 2.5) < 1e-12


@given(st.floats(-0.99, 20.0))
def test_bessel_scaled_limit(nu):
    assert abs(bessel_j_scaled(nu, 1e-8) - rgamma(nu + 1)) <= 1e-12


@settings(max_examples=200, deadline=None)
@given(st.floats(0.5, 20.0), st.floats(0.0, 500.0))
def test_bessel_bounded(nu, z):
    assert abs(bessel_j(nu, z)) <= 1.0


# -- 2F1 ---------------------------------------------------------------------

def _hyp_fraction(a, b, c, z):
    a, b, c, z = map(Fraction, (a, b, c, z))
    term, total, m = Fraction(1), Fraction(1), 0
    while True:
        term *= (a + m) * (b + m) / ((c + m) * (m + 1)) * z
        if term == 0:
            return total
        total += term
        m += 1


def test_hyp2f1_examples():
    assert hyp2f1(3.3, -1.7, 1.0, 0.0) == 1.0
    assert hyp2f1(0.5, 0.5, 2, 1) == pytest.approx(4 / math.pi, rel=1e-14)
    ref = float(_hyp_fraction(-2, 4, 1.5, 0.25))
    assert abs(hyp2f1(-2, 4, 1.5, 0.25) - ref) < 1e-15


def test_hyp2f1_errors():
    with pytest.raises(PoleError):
        hyp2f1(0.5, 0.5, -1.0, 0.3)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 0.5, 1.0, 1.5)


def test_hyp2f1_terminating_with_negative_c():
    # the series stops before the pole of (c)_m is reached
    ref = float(_hyp_fraction(-1, 2.5, -3, 0.4))
    assert hyp2f1(-1, 2.5, -3, 0.4) == pytest.approx(ref, rel=1e-15)


params = st.tuples(st.floats(-4, 4), st.floats(-4, 4), st.floats(0.3, 5))


@settings(max_examples=200, deadline=None)
@given(params, st.floats(0.0, 0.9))
def test_hyp2f1_euler_transform(p, z):
    a, b, c = p
    lhs = hyp2f1(a, b, c, z)
    rhs = (1 - z) ** (c - a - b) * hyp2f1(c - a, c - b, c, z)
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))


@settings(max_examples=200, deadline=None)
@given(params, st.floats(0.0, 0.999))
def test_hyp2f1_against_mpmath(p, z):
    a, b, c = p
    ref = float(mpmath.hyp2f1(a, b, c, z))
    try:
        val = hyp2f1(a, b, c, z)
    except ConvergenceError:
        return
    assert abs(val - ref) <= 1e-10 * max(1.0, abs(ref))


@settings(max_examples=200, deadline=None)
@given(params)
def test_hyp2f1_gauss_summation(p):
    a, b, c = p
    if c - a - b <= 0.05:
        c = a + b + 0.05 + abs(c)
    ref = float(mpmath.gamma(c) * mpmath.gamma(c - a - b)
                * mpmath.rgamma(c - a) * mpmath.rgamma(c - b))
    assert abs(hyp2f1(a, b, c, 1.0) - ref) <= 1e-11 * max(1.0, abs(ref))


# -- Gegenbauer --------------------------------------------------------------

def test_gegenbauer_examples():
    assert gegenbauer(0, 0.7, 0.3) == 1.0
    assert gegenbauer(2, 1.0, 0.5) == pytest.approx(0.0, abs=1e-15)
    # lambda = -1/2 puts the 2F1 denominator parameter at 0; the polynomial is
    # the limit in lambda, C_2 = 2 lam (lam+1) x^2 - lam
    lam, x = Fraction(-1, 2), Fraction(1, 5)
    ref = 2 * lam * (lam + 1) * x * x - lam
    assert gegenbauer(2, -0.5, 0.2) == pytest.approx(float(ref), rel=1e-15)


def _gegenbauer_mp(n, lam, x):
    """Explicit power sum (a polynomial in lam) in extended precision, and
    the sum of absolute terms as a conditioning scale."""
    with mpmath.workdps(40):
        terms = [(-1) ** j * mpmath.rf(lam, n - j) / (mpmath.factorial(j) * mpmath.factorial(n - 2 * j))
                 * (2 * mpmath.mpf(x)) ** (n - 2 * j) for j in range(n // 2 + 1)]
        return float(mpmath.fsum(terms)), float(mpmath.fsum(abs(t) for t in terms))


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10), st.floats(-3.0, 5.0), st.floats(-1.0, 1.0))
def test_gegenbauer_against_power_sum(n, lam, x):
    ref, _ = _gegenbauer_mp(n, lam, x)
    # the hypergeometric form expands about x = 1, so its rounding scales
    # with the size of the polynomial there
    _, edge = _gegenbauer_mp(n, lam, 1.0)
    assert abs(gegenbauer(n, lam, x) - ref) <= 1e-12 * max(1.0, abs(ref), edge)


def test_gegenbauer_degenerate_limit():
    # C_4^(-3/2)(x) = (3/8)(1 - x^2)^2
    for x in (-0.9, -0.3, 0.0, 0.4, 0.8):
        assert gegenbauer(4, -1.5, x) == pytest.approx(0.375 * (1 - x * x) ** 2, rel=1e-13, abs=1e-15)


def test_quadratic_form_examples():
    assert gegenbauer_quadratic_form(0, 1.2, 0.4) == pytest.approx(1.0, abs=1e-12)
    assert gegenbauer_quadratic_form(1, 3, 0.25) == pytest.approx(-0.75, rel=1e-12)
    assert gegenbauer_quadratic_form(2, 4.5, 0.0) == pytest.approx(gegenbauer(4, 0.5, 0.0), rel=1e-12)
    with pytest.raises(DomainError):
        gegenbauer_quadratic_form(1, 3, 1.0)


@pytest.mark.parametrize("k", [0, 1, 2])
@pytest.mark.parametrize("mu", [2.5, 3.0, 4.5])
def test_quadratic_form_identity(k, mu):
    for i in range(50):
        x = -0.95 + 1.9 * (i + 0.5) / 50
        ref = gegenbauer(2 * k, mu - 2 * k, x)
        got = gegenbauer_quadratic_form(k, mu, x)
        assert abs(got - ref) <= max(1e-9 * abs(ref), 1e-12)
