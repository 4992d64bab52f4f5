"""Tests for raw series evaluation: reduction identities, closed forms,
tail honesty, and parameter validation."""

from __future__ import annotations

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy.special import j0, j1, jn_zeros

from starradii.errors import ComputationError, ParameterError
from starradii.series_eval import (
    Legendre,
    Lommel,
    MittagLeffler,
    RamanujanQ,
    Struve,
    Wright,
    eval_base,
    eval_deriv,
)

try:
    from hypothesis import given, settings
    from hypothesis import strategies as st

    HAS_HYPOTHESIS = True
except ImportError:
    HAS_HYPOTHESIS = False


def test_wright_at_zero_is_one():
    r = eval_base(Wright(1.0, 1.0), 0.0)
    assert r.value == 1.0
    assert r.terms_used >= 1


def test_wright_reduces_to_bessel():
    # Phi(1, nu+1, -z^2) = z^-nu J_nu(2z) for nu = 0, 1
    zs = np.linspace(0.01, 3.0, 100)
    w0 = Wright(1.0, 1.0)
    w1 = Wright(1.0, 2.0)
    for z in zs:
        got0 = eval_base(w0, -z * z).value
        assert_allclose(got0, j0(2 * z), rtol=1e-12, atol=1e-12)
        got1 = eval_base(w1, -z * z).value
        assert_allclose(got1, j1(2 * z) / z, rtol=1e-12, atol=1e-12)


def test_wright_vanishes_at_scaled_bessel_zero():
    t = jn_zeros(0, 1)[0] / 2.0
    r = eval_base(Wright(1.0, 1.0), -t * t)
    assert abs(r.value) <= 1e-9


def test_error_within_reported_tail():
    w0 = Wright(1.0, 1.0)
    for z in np.linspace(0.05, 3.0, 40):
        r = eval_base(w0, -z * z)
        true = j0(2 * z)
        assert abs(r.value - true) <= r.abs_tail_bound + 1e-13 * abs(true)


def test_mittag_leffler_exponential_reductions():
    m11 = MittagLeffler(1.0, 1.0, 1.0)
    m21 = MittagLeffler(1.0, 2.0, 1.0)
    for x in np.linspace(0.05, 3.0, 100):
        assert_allclose(eval_base(m11, x).value, math.exp(x), rtol=1e-12)
        assert_allclose(eval_base(m21, x).value, (math.exp(x) - 1.0) / x, rtol=1e-12)
    assert_allclose(eval_deriv(m11, 1, 0.7).value, math.exp(0.7), rtol=1e-12)


def test_legendre_matches_recurrence_oracle():
    assert eval_base(Legendre(2), 0.5).value == pytest.approx(-0.4375, abs=1e-15)
    # P_3' = (15 x^2 - 3)/2, P_3'' = 15 x
    for x in (-0.8, -0.25, 0.0, 0.3, 0.9):
        assert_allclose(eval_base(Legendre(2), x).value, 0.5 * (5 * x**3 - 3 * x), atol=1e-14)
        assert_allclose(eval_deriv(Legendre(2), 1, x).value, 0.5 * (15 * x**2 - 3), atol=1e-14)
        assert_allclose(eval_deriv(Legendre(2), 2, x).value, 15.0 * x, atol=1e-14)


def test_legendre_against_scipy_high_degree():
    from scipy.special import eval_legendre

    fam = Legendre(5)  # degree 9
    xs = np.linspace(-1, 1, 21)
    got = np.array([eval_base(fam, float(x)).value for x in xs])
    assert_allclose(got, eval_legendre(9, xs), atol=1e-13)


def test_struve_half_closed_form():
    # H_{1/2}(z) = sqrt(2/(pi z)) (1 - cos z), reached from the 1F2 kernel by
    # H_beta(z) = (z/2)^(beta+1) / (Gamma(3/2) Gamma(beta+3/2)) * kernel(-z^2/4)
    fam = Struve(0.5)
    pref = 1.0 / (math.gamma(1.5) * math.gamma(2.0))

    def struve_half(z):
        return (z / 2.0) ** 1.5 * pref * eval_base(fam, -z * z / 4.0).value

    def struve_half_prime(z):
        inner = eval_base(fam, -z * z / 4.0).value
        dinner = eval_deriv(fam, 1, -z * z / 4.0).value * (-z / 2.0)
        return pref * (1.5 * (z / 2.0) ** 0.5 * 0.5 * inner + (z / 2.0) ** 1.5 * dinner)

    for z in (0.4, 1.0, 1.7, 2.9):
        closed = math.sqrt(2.0 / (math.pi * z)) * (1.0 - math.cos(z))
        closed_prime = -0.5 * math.sqrt(2.0 / math.pi) * z**-1.5 * (
            1.0 - math.cos(z)
        ) + math.sqrt(2.0 / (math.pi * z)) * math.sin(z)
        assert_allclose(struve_half(z), closed, rtol=1e-12)
        assert_allclose(struve_half_prime(z), closed_prime, rtol=1e-11)


def test_ramanujan_q_against_mp_oracle():
    import mpmath as mp

    beta, q, a = 1.0, 0.5, 1.0
    fam = RamanujanQ(beta, q, a)
    with mp.workdps(40):
        for x in (-2.0, -0.3, 0.5, 3.0):
            acc = mp.mpf(0)
            num = mp.mpf(1)  # (-a; q)_n with the stored sign convention
            den = mp.mpf(1)  # (q; q)_n
            for n in range(60):
                acc += num * mp.mpf(q) ** (beta * n * n) * mp.mpf(x) ** n / den
                num *= 1 + a * mp.mpf(q) ** n
                den *= 1 - mp.mpf(q) ** (n + 1)
            assert_allclose(eval_base(fam, x).value, float(acc), rtol=1e-12)


def test_complex_argument_conjugate_symmetry():
    fams = [
        Wright(0.5, 2.0),
        MittagLeffler(1.5, 1.0, 1.0),
        Lommel(0.3),
        Struve(-0.3),
        Legendre(3),
        RamanujanQ(1.0, 0.5, 1.0),
    ]
    for fam in fams:
        for z in (0.3 + 0.4j, -1.1 + 0.2j, 2.0 - 1.5j):
            a = eval_base(fam, z).value
            b = eval_base(fam, z.conjugate()).value
            assert abs(a.conjugate() - b) <= 1e-12 * max(1.0, abs(a))


def test_deriv_order_validated():
    with pytest.raises(ParameterError):
        eval_deriv(Wright(1.0, 1.0), 3, 0.5)


def test_overflow_is_an_error():
    with pytest.raises(ComputationError):
        eval_base(Wright(1.0, 1.0), 1.0e6)


def test_family_parameter_validation():
    with pytest.raises(ParameterError):
        Wright(0.0, 1.0)
    with pytest.raises(ParameterError):
        MittagLeffler(1.0, -0.5, 1.0)
    with pytest.raises(ParameterError):
        Lommel(0.0)
    with pytest.raises(ParameterError):
        Lommel(1.5)
    with pytest.raises(ParameterError):
        Struve(0.75)
    with pytest.raises(ParameterError):
        Legendre(0)
    with pytest.raises(ParameterError):
        RamanujanQ(1.0, 1.5, 1.0)


if HAS_HYPOTHESIS:

    @given(
        st.floats(min_value=-2.5, max_value=2.5),
        st.floats(min_value=-2.5, max_value=2.5),
    )
    @settings(max_examples=60, deadline=None)
    def test_derivative_consistent_with_difference_quotient(re, im):
        fam = MittagLeffler(1.2, 1.3, 0.7)
        z = complex(re, im)
        h = 1e-6
        d1 = eval_deriv(fam, 1, z).value
        approx = (eval_base(fam, z + h).value - eval_base(fam, z - h).value) / (2 * h)
        assert abs(d1 - approx) <= 1e-6 * max(1.0, abs(d1))

    @given(st.floats(min_value=0.0, max_value=3.0))
    @settings(max_examples=60, deadline=None)
    def test_wright_bessel_identity_random_points(t):
        got = eval_base(Wright(1.0, 1.0), -t * t)
        assert abs(got.value - j0(2 * t)) <= 1e-12 + got.abs_tail_bound
