"""Acceptance suite: ten numbered criteria covering closed-form anchors,
the alpha catalog, the epsilon = 1 collapse, the containment protocol
across a 12-configuration matrix, the Monte-Carlo inequality suites,
interlacing, monotonicity sweeps, and cross-method oracle consistency.

Each test prints one pass/fail line (run with -s to see them on success).
Criterion 8 is expected to fail honestly: its Mittag-Leffler slice asks
for a 10-entry interlacing table from a kernel that has only three real
zeros; the complete 3-zero tables are verified instead and the shortfall
is reported, not papered over.
"""

from __future__ import annotations

import math
import time
import warnings

import pytest
from scipy.optimize import brentq
from scipy.special import j0, j1, jn_zeros

from starradii.errors import TableError
from starradii.families import (
    Legendre,
    Lommel,
    MittagLeffler,
    RamanujanQ,
    Struve,
    Wright,
)
from starradii.normalizations import NormalizedFunction
from starradii.radius_solver import (
    Convex,
    Starlike,
    convex_radius,
    starlike_radius,
    strongly_starlike_radius,
)
from starradii.target_domains import (
    CardioidExp,
    Conic,
    Disk,
    Exponential,
    Janowski,
    Lemniscate,
    Lune,
    RLCrescent,
    Sigmoid,
    Sine,
    alpha_numeric,
    alpha_of,
)
from starradii.verification import (
    check_disk_containment,
    check_disk_lemma,
    check_lambda_inequality,
    check_sharpness,
    check_zero_sum_agreement,
)
from starradii.zero_tables import check_interlacing, positive_zeros

# (family, form, alpha): all six families, all three forms
MATRIX = [
    (Wright(1.0, 1.0), "g", 1.0),
    (Wright(2.0, 1.5), "f", 0.5),
    (Wright(1.0, 1.0), "h", 0.5),
    (MittagLeffler(3.0, 1.0, 1.0), "g", 1.0),
    (MittagLeffler(3.0, 1.5, 1.0), "f", 0.5),
    (Lommel(0.3), "g", 1.0),
    (Lommel(-0.3), "f", 0.5),
    (Struve(0.3), "g", 1.0),
    (Struve(0.3), "h", 0.5),
    (Struve(0.4), "f", 0.5),
    (RamanujanQ(1.0, 0.5, 1.0), "g", 1.0),
    (Legendre(2), "g", 0.5),
]

REPRESENTATIVES = [
    Wright(1.0, 1.0),
    MittagLeffler(3.0, 1.0, 1.0),
    Lommel(0.3),
    Struve(0.3),
    RamanujanQ(1.0, 0.5, 1.0),
    Legendre(201),
]


def report(num: int, ok: bool, detail: str, t0: float, budget: float) -> None:
    elapsed = time.perf_counter() - t0
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail} ({elapsed:.1f}s)"
    print(line)
    assert ok, line
    assert elapsed < budget, f"criterion {num} exceeded {budget}s budget"


def test_criterion_01_legendre_anchors():
    t0 = time.perf_counter()
    nf = NormalizedFunction(Legendre(2), "g")
    ds = abs(starlike_radius(nf, Disk(1.0)).radius - 1.0 / math.sqrt(5.0))
    dc = abs(convex_radius(nf, Disk(1.0)).radius - 1.0 / math.sqrt(15.0))
    report(
        1, ds <= 1e-10 and dc <= 1e-10,
        f"legendre degree-3 anchors 1/sqrt(5), 1/sqrt(15); "
        f"deviations {ds:.1e}, {dc:.1e}", t0, 1.0,
    )


def test_criterion_02_struve_cotangent_anchor():
    t0 = time.perf_counter()
    nf = NormalizedFunction(Struve(0.5), "V")
    worst = 0.0
    for alpha in (0.25, 0.5, 1.0):
        want = brentq(
            lambda r: r / math.tan(0.5 * r) - (2.0 - alpha), 0.5, 2.6,
            xtol=1e-14,
        )
        worst = max(worst, abs(starlike_radius(nf, Disk(alpha)).radius - want))
    report(
        2, worst <= 1e-9,
        f"struve(1/2) matches r cot(r/2) = 2 - alpha; worst {worst:.1e}",
        t0, 1.0,
    )


def test_criterion_03_bessel_reduction_anchor(tables):
    t0 = time.perf_counter()
    nf = NormalizedFunction(Wright(1.0, 1.0), "g")
    want = brentq(lambda r: j0(2 * r) - 2 * r * j1(2 * r), 0.3, 0.9, xtol=1e-14)
    dr = abs(starlike_radius(nf, Disk(1.0)).radius - want)
    dz = abs(tables(Wright(1.0, 1.0), "base", 1).first - jn_zeros(0, 1)[0] / 2.0)
    report(
        3, dr <= 1e-9 and dz <= 1e-10,
        f"wright(1,1) Bessel radius dev {dr:.1e}, first zero dev {dz:.1e}",
        t0, 1.0,
    )


def test_criterion_04_alpha_catalog():
    t0 = time.perf_counter()
    exact = [
        (Janowski(1.0, -1.0), 1.0),
        (Lemniscate(), math.sqrt(2.0) - 1.0),
        (RLCrescent(), math.sqrt(2.0 - 2.0 * math.sqrt(2.0)
                                 + math.sqrt(2.0 * math.sqrt(2.0) - 2.0))),
        (Lune(), 2.0 - math.sqrt(2.0)),
        (CardioidExp(), math.exp(-1.0)),
        (Sigmoid(), (math.e - 1.0) / (math.e + 1.0)),
        (Sine(), math.sin(1.0)),
        (Conic(1.0), 0.5),
    ]
    ok = all(abs(alpha_of(d).alpha - want) <= 1e-15 for d, want in exact)
    numeric = exact + [(Conic(0.0), 1.0), (Disk(0.7), 0.7)]
    worst_num = max(
        abs(alpha_numeric(d).alpha - alpha_of(d).alpha) for d, _ in numeric
    )
    with pytest.warns(UserWarning, match="e - 1"):
        exp = alpha_of(Exponential())
    exp_ok = (
        exp.printed_alpha == pytest.approx(math.e - 1.0)
        and abs(alpha_numeric(Exponential()).alpha - (1.0 - math.exp(-1.0)))
        <= 1e-8
    )
    report(
        4, ok and worst_num <= 1e-8 and exp_ok,
        f"8 closed forms exact, numeric oracle within {worst_num:.1e}, "
        "exponential discrepancy reported", t0, 5.0,
    )


def test_criterion_05_epsilon_one_collapse(tables):
    t0 = time.perf_counter()
    configs = [
        (Wright(1.0, 1.0), "g", 60),
        (Struve(0.3), "V", 60),
        (MittagLeffler(1.5, 1.0, 1.0), "g", 3),
        (RamanujanQ(1.0, 0.5, 1.0), "g", 60),
        (Lommel(0.3), "g", 60),
    ]
    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        for fam, form, n in configs:
            nf = NormalizedFunction(fam, form)
            sect = strongly_starlike_radius(nf, 1.0, tables(fam, "base", n))
            star = starlike_radius(nf, Disk(1.0))
            worst = max(worst, abs(sect.radius - star.radius))
    report(
        5, worst <= 1e-8,
        f"sector radius at epsilon=1 equals starlike radius at alpha=1 "
        f"across 5 configs; worst gap {worst:.1e}", t0, 10.0,
    )


def test_criterion_06_containment_protocol():
    t0 = time.perf_counter()
    failures = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        for fam, form, alpha in MATRIX:
            nf = NormalizedFunction(fam, form)
            jobs = (
                (Starlike, starlike_radius, "starlike"),
                (Convex, convex_radius, "convex"),
            )
            for problem, solver, which in jobs:
                res = solver(nf, Disk(alpha))
                inner = check_disk_containment(
                    nf, 0.99 * res.radius, alpha, 512, which
                )
                outer = check_disk_containment(
                    nf, 1.01 * res.radius, alpha, 512, which
                )
                sharp = check_sharpness(nf, problem(Disk(alpha)), res.radius)
                if not (inner.passed and not outer.passed and sharp.passed):
                    failures.append(f"{nf.label()} {which}")
    report(
        6, not failures,
        "24 certifications (12 configs x starlike/convex): 0.99r inside, "
        f"1.01r outside, sharp to 1e-9; failures: {failures or 'none'}",
        t0, 60.0,
    )


def test_criterion_07_inequality_suites():
    t0 = time.perf_counter()
    disk = check_disk_lemma(trials=100000)
    lam = check_lambda_inequality(trials=100000)
    report(
        7, disk.passed and lam.passed,
        f"1e5 trials each; violations {disk.max_violation:.1e}, "
        f"{lam.max_violation:.1e} (tolerance 1e-12)", t0, 10.0,
    )


def test_criterion_08_interlacing(tables):
    t0 = time.perf_counter()
    strict = [
        Wright(1.0, 1.0),
        Wright(0.5, 2.0),
        Lommel(0.3),
        Lommel(-0.3),
        Struve(0.3),
        RamanujanQ(1.0, 0.5, 1.0),
    ]
    strict_ok = True
    for fam in strict:
        upper = tables(fam, "base", 10)
        for kind in ("weighted_derivative", "g_prime"):
            rep = check_interlacing(tables(fam, kind, 10), upper)
            strict_ok &= rep.ok and rep.pairs_checked == 10
    exempt = check_interlacing(
        tables(Struve(0.5), "weighted_derivative", 10),
        tables(Struve(0.5), "base", 10),
    )
    # the remaining listed family cannot reach N=10: its kernel stops at
    # three real zeros, so the complete 3-zero tables are checked instead
    fam = MittagLeffler(1.5, 1.0, 1.0)
    with pytest.raises(TableError, match="3 real zeros"):
        positive_zeros(fam, "base", 10)
    short = check_interlacing(tables(fam, "g_prime", 3), tables(fam, "base", 3))
    report(
        8, False,
        "six families strict at N=10 "
        f"({'ok' if strict_ok else 'VIOLATED'}), struve(1/2) degenerate flag "
        f"({'ok' if exempt.degenerate else 'missing'}); "
        "mittag-leffler(1.5,1,1) slice unattainable: the kernel has only "
        "three real zeros, so no 10-entry table exists; its complete "
        f"3-zero tables interlace ({'ok' if short.ok else 'VIOLATED'})",
        t0, 30.0,
    )


def test_criterion_09_monotonicity_sweeps(tables):
    t0 = time.perf_counter()
    grid = [0.1 * (k + 1) for k in range(10)]
    failures = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        for fam, form, _ in MATRIX:
            nf = NormalizedFunction(fam, form)
            stars = [starlike_radius(nf, Disk(a)).radius for a in grid]
            convs = [convex_radius(nf, Disk(a)).radius for a in grid]
            n = 1 if isinstance(fam, Legendre) else 60
            table = tables(fam, "base", n)
            sects = [
                strongly_starlike_radius(nf, e, table).radius for e in grid
            ]
            if not all(a < b for a, b in zip(stars, stars[1:])):
                failures.append(f"{nf.label()} alpha")
            if not all(a < b for a, b in zip(sects, sects[1:])):
                failures.append(f"{nf.label()} epsilon")
            if not all(c < s for c, s in zip(convs, stars)):
                failures.append(f"{nf.label()} ordering")
    report(
        9, not failures,
        "radii strictly increasing on 10-point alpha and epsilon grids, "
        f"convex < starlike throughout; failures: {failures or 'none'}",
        t0, 60.0,
    )


def test_criterion_10_zero_sum_consistency(tables):
    t0 = time.perf_counter()
    worst = 0.0
    ok = True
    for fam in REPRESENTATIVES:
        nf = NormalizedFunction(fam, "g")
        rep = check_zero_sum_agreement(nf, tables(fam, "base", 200), 20)
        ok &= rep.passed
        worst = max(worst, rep.max_violation)
    report(
        10, ok and worst == 0.0,
        "ratio vs zero-sum agree within certified tails at 20 interior "
        "points for all six families (N=200)", t0, 30.0,
    )
