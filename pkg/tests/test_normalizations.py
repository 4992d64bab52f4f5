"""Tests for normalized forms and the S/C functionals: closed-form oracles,
finite-difference cross-checks of the ratio formulas, zero-sum agreement
within certified tails, and the symmetry/monotonicity structure the radius
solver relies on."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.special import j0, j1

from starradii.errors import ParameterError, PoleProximityError
from starradii.families import (
    Legendre,
    Lommel,
    RamanujanQ,
    Struve,
    Wright,
)
from starradii.normalizations import (
    NormalizedFunction,
    convex_functional,
    convex_many,
    starlike_functional,
    starlike_many,
    sum_over_zeros_functional,
)

try:
    from hypothesis import given, settings
    from hypothesis import strategies as st

    HAS_HYPOTHESIS = True
except ImportError:
    HAS_HYPOTHESIS = False


SAMPLE_FUNCTIONS = [
    NormalizedFunction(Wright(1.0, 1.0), "g"),
    NormalizedFunction(Wright(2.0, 1.5), "f"),
    NormalizedFunction(Wright(1.0, 1.0), "h"),
    NormalizedFunction(Lommel(0.3), "f"),
    NormalizedFunction(Struve(0.3), "V"),
    NormalizedFunction(RamanujanQ(1.0, 0.5, 1.0), "g"),
    NormalizedFunction(Legendre(2), "p"),
]


# -- closed-form oracles ----------------------------------------------------


def test_wright_g_starlike_is_bessel_ratio():
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    for r in (0.1, 0.3, 0.6, 0.9):
        want = 1.0 - 2.0 * r * j1(2 * r) / j0(2 * r)
        assert starlike_functional(nf, r) == pytest.approx(want, rel=1e-13)


def test_struve_v_starlike_is_cotangent():
    nf = NormalizedFunction(Struve(0.5), "V")
    for r in (0.4, 1.1, 2.0):
        want = r / math.tan(r / 2.0) - 1.0
        assert starlike_functional(nf, r) == pytest.approx(want, rel=1e-13)


def test_legendre_convex_closed_form():
    nf = NormalizedFunction(Legendre(2), "p")
    for r in (0.1, 0.2, 0.35):
        want = 1.0 - 10.0 * r * r / (1.0 - 5.0 * r * r)
        assert convex_functional(nf, r) == pytest.approx(want, rel=1e-13)


def test_functionals_are_one_at_origin():
    for nf in SAMPLE_FUNCTIONS:
        assert starlike_functional(nf, 0.0) == 1.0
        assert convex_functional(nf, 0.0) == 1.0
        z = 1e-6
        # f/g corrections are O(z^2); the h form picks up a linear term
        tol = 1e-5 if nf.form == "h" else 1e-10
        assert abs(starlike_functional(nf, z) - 1.0) <= tol
        assert abs(convex_functional(nf, z) - 1.0) <= tol


def test_value_normalization_at_origin():
    for nf in SAMPLE_FUNCTIONS:
        z = 1e-6
        tol = 1e-5 if nf.form == "h" else 1e-10
        assert abs(nf.value(z) / z - 1.0) <= tol


# -- derivative identities --------------------------------------------------


def _fd_ratio_checks(nf, z, eps=1e-3):
    # Richardson-extrapolated central differences of value()
    def d1(e):
        return (nf.value(z + e) - nf.value(z - e)) / (2 * e)

    def d2(e):
        return (nf.value(z + e) - 2 * nf.value(z) + nf.value(z - e)) / (e * e)

    fp = (4 * d1(eps / 2) - d1(eps)) / 3
    fpp = (4 * d2(eps / 2) - d2(eps)) / 3
    f0 = nf.value(z)
    return z * fp / f0, 1 + z * fpp / fp


@pytest.mark.parametrize("nf", SAMPLE_FUNCTIONS, ids=lambda nf: nf.label())
def test_ratio_formulas_match_finite_differences(nf):
    z = 0.23 + 0.11j
    s_fd, c_fd = _fd_ratio_checks(nf, z)
    assert abs(starlike_functional(nf, z) - s_fd) <= 2e-7
    assert abs(convex_functional(nf, z) - c_fd) <= 2e-7


def test_f_form_collapses_to_g_at_weight_one():
    # Wright beta = 1 has weight 1, so f and g are the same function
    f = NormalizedFunction(Wright(0.7, 1.0), "f")
    g = NormalizedFunction(Wright(0.7, 1.0), "g")
    for z in (0.3, 0.2 + 0.4j):
        assert starlike_functional(f, z) == pytest.approx(
            starlike_functional(g, z), rel=1e-14
        )
        assert convex_functional(f, z) == pytest.approx(
            convex_functional(g, z), rel=1e-14
        )


# -- zero-sum cross-checks --------------------------------------------------


def test_starlike_sum_matches_ratio_within_tail(tables):
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    tab = tables(Wright(1.0, 1.0), "base", 100)
    for z in (0.5, 0.3 + 0.2j):
        res = sum_over_zeros_functional(nf, z, tab, "starlike")
        assert abs(res.value - starlike_functional(nf, z)) <= res.tail_bound
        assert res.terms == 100


def test_convex_sum_matches_ratio_within_tail(tables):
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    tab = tables(Wright(1.0, 1.0), "g_prime", 100)
    res = sum_over_zeros_functional(nf, 0.3, tab, "convex")
    assert abs(res.value - convex_functional(nf, 0.3)) <= res.tail_bound


def test_f_form_convex_sum_needs_both_tables(tables):
    fam = Wright(2.0, 1.5)
    nf = NormalizedFunction(fam, "f")
    wt = tables(fam, "weighted_derivative", 80)
    bt = tables(fam, "base", 80)
    res = sum_over_zeros_functional(nf, 0.4, wt, "convex", base_table=bt)
    assert abs(res.value - convex_functional(nf, 0.4)) <= res.tail_bound
    with pytest.raises(ParameterError, match="base table"):
        sum_over_zeros_functional(nf, 0.4, wt, "convex")


def test_h_form_sums_in_sqrt_variable(tables):
    fam = Wright(1.0, 1.0)
    nf = NormalizedFunction(fam, "h")
    res = sum_over_zeros_functional(nf, 0.2, tables(fam, "base", 80), "starlike")
    assert abs(res.value - starlike_functional(nf, 0.2)) <= res.tail_bound
    res = sum_over_zeros_functional(nf, 0.2, tables(fam, "h_prime", 80), "convex")
    assert abs(res.value - convex_functional(nf, 0.2)) <= res.tail_bound


def test_legendre_single_zero_sum_is_exact(tables):
    # degree 3: one positive zero at sqrt(3/5), sum has a single term
    nf = NormalizedFunction(Legendre(2), "p")
    tab = tables(Legendre(2), "base", 1)
    z = 0.3
    res = sum_over_zeros_functional(nf, z, tab, "starlike")
    want = 1.0 - 2.0 * z * z / (0.6 - z * z)
    assert res.value == pytest.approx(want, rel=1e-12)
    assert res.tail_bound <= 1e-15
    assert res.value == pytest.approx(starlike_functional(nf, z), rel=1e-12)


# -- structure the solver relies on ----------------------------------------


@pytest.mark.parametrize(
    "nf",
    [
        NormalizedFunction(Wright(1.0, 1.0), "g"),
        NormalizedFunction(Lommel(0.3), "f"),
        NormalizedFunction(RamanujanQ(1.0, 0.5, 1.0), "h"),
    ],
    ids=lambda nf: nf.label(),
)
def test_real_axis_monotone_decreasing(nf, tables):
    kind = {"f": "weighted_derivative", "g": "g_prime", "h": "h_prime"}[nf.form]
    ub = tables(nf.family, kind, 1).first
    if nf.form == "h":
        ub = ub * ub
    rs = np.linspace(ub * 1e-3, ub * 0.999, 200)
    s_vals = starlike_many(nf, rs).real
    c_vals = convex_many(nf, rs).real
    assert np.all(np.diff(s_vals) < 0)
    assert np.all(np.diff(c_vals) < 0)


def test_conjugate_symmetry():
    for nf in SAMPLE_FUNCTIONS:
        z = 0.2 + 0.3j
        assert starlike_functional(nf, z.conjugate()) == pytest.approx(
            starlike_functional(nf, z).conjugate(), rel=1e-13
        )
        assert convex_functional(nf, z.conjugate()) == pytest.approx(
            convex_functional(nf, z).conjugate(), rel=1e-13
        )


def test_real_point_attains_boundary_extremes(tables):
    # min Re S and max |S - 1| over a circle sit on the positive real axis
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    r = 0.7 * tables(Wright(1.0, 1.0), "base", 1).first
    thetas = np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False)
    vals = starlike_many(nf, r * np.exp(1j * thetas))
    assert np.argmin(vals.real) == 0
    assert np.argmax(np.abs(vals - 1.0)) == 0


def test_pole_proximity_raises(tables):
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    zero = tables(Wright(1.0, 1.0), "base", 1).first
    with pytest.raises(PoleProximityError):
        starlike_functional(nf, zero)
    with pytest.raises(PoleProximityError):
        starlike_many(nf, np.array([0.1, zero, 0.2]))


# -- construction errors ----------------------------------------------------


def test_form_validation():
    with pytest.raises(ParameterError):
        NormalizedFunction(Legendre(2), "f")
    with pytest.raises(ParameterError):
        NormalizedFunction(Lommel(-0.6), "f")  # weight u + 1/2 <= 0
    with pytest.raises(ParameterError):
        NormalizedFunction(Wright(1.0, 1.0), "V")  # Struve-only alias
    with pytest.raises(ParameterError):
        NormalizedFunction(Wright(1.0, 1.0), "q")
    assert NormalizedFunction(Struve(0.3), "U").form == "f"
    assert NormalizedFunction(Struve(0.3), "W").form == "h"
    assert NormalizedFunction(Legendre(2), "p").form == "g"
    assert NormalizedFunction(Lommel(-0.6), "g").form == "g"


def test_sum_argument_validation(tables):
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    base = tables(Wright(1.0, 1.0), "base", 10)
    gp = tables(Wright(1.0, 1.0), "g_prime", 10)
    with pytest.raises(ParameterError, match="needs a 'base'"):
        sum_over_zeros_functional(nf, 0.3, gp, "starlike")
    with pytest.raises(ParameterError, match="different family"):
        sum_over_zeros_functional(
            NormalizedFunction(Lommel(0.3), "g"), 0.3, base, "starlike"
        )
    with pytest.raises(ParameterError, match="outside"):
        sum_over_zeros_functional(nf, base.first * 1.01, base, "starlike")
    with pytest.raises(ParameterError):
        sum_over_zeros_functional(nf, 0.3, base, "starlikeish")


if HAS_HYPOTHESIS:

    @given(
        st.floats(min_value=0.05, max_value=3.0),
        st.floats(min_value=0.0, max_value=2 * math.pi),
        st.floats(min_value=1e-3, max_value=2.0),
        st.floats(min_value=1e-3, max_value=2.0),
        st.floats(min_value=0.0, max_value=1.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_pole_term_comparison_inequality(rad, theta, dy, dx, lam):
        # |z/(y-z) - lam z/(x-z)| <= |z|/(y-|z|) - lam |z|/(x-|z|) for x > y > |z|
        z = rad * complex(math.cos(theta), math.sin(theta))
        y = rad + dy
        x = y + dx
        lhs = abs(z / (y - z) - lam * z / (x - z))
        rhs = rad / (y - rad) - lam * rad / (x - rad)
        assert lhs <= rhs + 1e-12 * (1 + rhs)
