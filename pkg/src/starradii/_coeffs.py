"""Kernel coefficient providers.

For every family the even kernel is K(t) = B(-t^2) where B(w) = sum c_n w^n,
c_0 = 1, c_n > 0.  Positivity lets us store natural logs of the coefficients,
which is what both kernel backends consume.  Caches grow geometrically and are
keyed by the (hashable, frozen) family descriptor.

The raw named series of each family is recovered as  prefactor * B(s * x):
Lommel and Struve carry the hypergeometric argument scale s = 4 (their 1F2
argument is -z^2/4), Wright and Mittag-Leffler carry a 1/Gamma prefactor.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import lgamma, log, log1p

import numpy as np

from .errors import ConvergenceError, ParameterError
from .families import (
    FunctionFamily,
    Legendre,
    Lommel,
    MittagLeffler,
    RamanujanQ,
    Struve,
    Wright,
)

HARD_TERM_CAP = 10_000
_INITIAL_LEN = 128

_double_cache: dict[FunctionFamily, np.ndarray] = {}
_mp_cache: dict[FunctionFamily, tuple[int, list]] = {}
_mp_ratio_cache: dict[FunctionFamily, tuple[int, list]] = {}
_legendre_fraction_cache: dict[int, list[Fraction]] = {}


def _lommel_params(u: float) -> tuple[float, float]:
    return (u + 2.0) / 2.0, (u + 3.0) / 2.0


def _legendre_fractions(n: int) -> list[Fraction]:
    """Exact positive coefficients c_j of B(w) for the degree 2n-1 polynomial.

    The normalized odd polynomial is z * K(z) with K(t) = B(-t^2); dividing
    the Rodrigues expansion by its linear coefficient makes c_0 = 1 and the
    alternating signs of the Legendre coefficients make every c_j positive.
    """
    if n in _legendre_fraction_cache:
        return _legendre_fraction_cache[n]
    m = 2 * n - 1
    # coefficient of x^(m-2k) in P_m is (-1)^k C(m,k) C(2m-2k,m) / 2^m
    raw = [
        Fraction((-1) ** k * math.comb(m, k) * math.comb(2 * m - 2 * k, m), 2**m)
        for k in range(n)
    ]
    linear = raw[n - 1]  # coefficient of x^1, equals P'_m(0)
    coeffs = []
    for j in range(n):  # c_j multiplies w^j, i.e. power x^(2j+1) before w = -z^2
        c = raw[n - 1 - j] / linear * (-1) ** j
        if c <= 0:
            raise ParameterError(f"legendre coefficient sign unexpected at n={n}")
        coeffs.append(c)
    _legendre_fraction_cache[n] = coeffs
    return coeffs


def _log_coeff_block(family: FunctionFamily, count: int) -> np.ndarray:
    """Compute log c_n for n = 0 .. count-1 from scratch."""
    if isinstance(family, Wright):
        out = np.empty(count)
        for n in range(count):
            out[n] = lgamma(family.beta) - lgamma(n + 1.0) - lgamma(n * family.rho + family.beta)
        return out
    if isinstance(family, MittagLeffler):
        out = np.empty(count)
        la = lgamma(family.a)
        for n in range(count):
            out[n] = (
                lgamma(family.nu)
                + lgamma(family.a + n)
                - la
                - lgamma(n + 1.0)
                - lgamma(family.mu * n + family.nu)
            )
        return out
    if isinstance(family, (Lommel, Struve)):
        if isinstance(family, Lommel):
            b1, b2 = _lommel_params(family.u)
        else:
            b1, b2 = 1.5, family.beta + 1.5
        out = np.empty(count)
        lb1, lb2 = lgamma(b1), lgamma(b2)
        for n in range(count):
            out[n] = (
                -n * math.log(4.0)
                + lb1
                - lgamma(b1 + n)
                + lb2
                - lgamma(b2 + n)
            )
        return out
    if isinstance(family, RamanujanQ):
        lq = log(family.q)
        out = np.empty(count)
        num = 0.0  # log prod (1 + a q^j), j < n
        den = 0.0  # log prod (1 - q^j), 1 <= j <= n
        for n in range(count):
            out[n] = family.beta * n * n * lq + num - den
            num += log1p(family.a * family.q**n)
            den += log1p(-(family.q ** (n + 1)))
        return out
    if isinstance(family, Legendre):
        coeffs = _legendre_fractions(family.n)
        return np.array([log(c.numerator) - log(c.denominator) for c in coeffs])
    raise ParameterError(f"unknown family {family!r}")


def coeff_count(family: FunctionFamily) -> int | None:
    """Number of kernel coefficients, or None for entire (non-polynomial) kernels."""
    return family.n if isinstance(family, Legendre) else None


def log_coeffs(family: FunctionFamily, min_len: int = _INITIAL_LEN) -> np.ndarray:
    """Cached array of log c_n, at least min_len entries (capped for polynomials)."""
    finite = coeff_count(family)
    if finite is not None:
        min_len = finite
    if min_len > HARD_TERM_CAP:
        raise ConvergenceError(
            f"{family.label()}: series needs more than {HARD_TERM_CAP} terms"
        )
    arr = _double_cache.get(family)
    if arr is None or len(arr) < min_len:
        want = min_len if finite is not None else max(min_len, _INITIAL_LEN)
        arr = _log_coeff_block(family, want)
        _double_cache[family] = arr
    return arr


def c1(family: FunctionFamily) -> float:
    """First series coefficient; equals sum over kernel zeros of 1/zero^2."""
    arr = log_coeffs(family, 2)
    if len(arr) < 2:
        return 0.0  # degree-1 polynomial kernel (legendre n=1) has no zeros
    return math.exp(arr[1])


def c2(family: FunctionFamily) -> float:
    arr = log_coeffs(family, 3)
    if len(arr) < 3:
        return 0.0
    return math.exp(arr[2])


def first_zero_scale(family: FunctionFamily) -> float:
    """Rough scale of the first kernel zero, 1/sqrt(c_1)."""
    v = c1(family)
    if v <= 0.0:
        raise ParameterError(f"{family.label()}: kernel has no zeros to scan for")
    return 1.0 / math.sqrt(v)


def base_prefactor_log(family: FunctionFamily) -> float:
    """log of the factor turning B into the raw named series."""
    if isinstance(family, Wright):
        return -lgamma(family.beta)
    if isinstance(family, MittagLeffler):
        return -lgamma(family.nu)
    return 0.0


def base_arg_scale(family: FunctionFamily) -> float:
    """Argument scale s with raw_series(x) = prefactor * B(s x)."""
    return 4.0 if isinstance(family, (Lommel, Struve)) else 1.0


def log_max_term(
    family: FunctionFamily,
    log_abs_w: float,
    drop: float | None = 55.0,
    floor: float | None = None,
) -> tuple[float, int]:
    """Peak of log|c_n w^n| over n and a safe truncation index.

    Grows the coefficient cache until past-peak terms are either `drop` nats
    below the running peak or below the absolute `floor` (whichever cutoff
    is requested), or the polynomial ends.  The peak sets both the scaling
    of kernel evaluations and the precision needed to resolve the
    alternating-series cancellation; the absolute floor variant serves the
    high-precision path, where accuracy is needed relative to the final
    O(1)-sized value rather than to the peak.
    """
    length = len(log_coeffs(family))
    while True:
        arr = log_coeffs(family, length)
        v = arr + np.arange(len(arr)) * log_abs_w
        peak_n = int(np.argmax(v))
        peak = float(v[peak_n])
        thr = -math.inf
        if drop is not None:
            thr = peak - drop
        if floor is not None:
            thr = max(thr, floor)
        below = v[peak_n + 1 :] < thr
        if below.any():
            return peak, peak_n + 1 + int(np.argmax(below))
        if coeff_count(family) is not None:
            return peak, len(arr) - 1
        length *= 2  # log_coeffs raises once the hard cap is passed


def log_coeffs_mp(family: FunctionFamily, dps: int, min_len: int):
    """High-precision log c_n list for the far-zero path (mpmath mpf values).

    Polynomial kernels are exact and never come here.
    """
    import mpmath as mp

    cached = _mp_cache.get(family)
    if cached is not None and cached[0] >= dps and len(cached[1]) >= min_len:
        return cached[1]
    if min_len > HARD_TERM_CAP:
        raise ConvergenceError(
            f"{family.label()}: series needs more than {HARD_TERM_CAP} terms"
        )
    if not isinstance(family, (Wright, MittagLeffler, Lommel, Struve, RamanujanQ)):
        raise ParameterError(f"{family.label()}: no high-precision path is defined")
    out = []
    with mp.workdps(dps + 10):
        if isinstance(family, Wright):
            lgb = mp.loggamma(family.beta)
            for n in range(min_len):
                out.append(lgb - mp.loggamma(n + 1) - mp.loggamma(n * mp.mpf(family.rho) + family.beta))
        elif isinstance(family, MittagLeffler):
            lgn = mp.loggamma(family.nu)
            a = mp.mpf(family.a)  # float a + n would round before mpmath sees it
            lga = mp.loggamma(a)
            for n in range(min_len):
                out.append(
                    lgn
                    + mp.loggamma(a + n)
                    - lga
                    - mp.loggamma(n + 1)
                    - mp.loggamma(mp.mpf(family.mu) * n + family.nu)
                )
        elif isinstance(family, RamanujanQ):
            qm, am, bm = mp.mpf(family.q), mp.mpf(family.a), mp.mpf(family.beta)
            lq = mp.log(qm)
            num = mp.mpf(0)
            den = mp.mpf(0)
            for n in range(min_len):
                out.append(bm * (n * n) * lq + num - den)
                num += mp.log1p(am * qm**n)
                den += mp.log1p(-(qm ** (n + 1)))
        else:
            if isinstance(family, Lommel):
                b1, b2 = _lommel_params(family.u)
            else:
                b1, b2 = 1.5, family.beta + 1.5
            b1, b2 = mp.mpf(b1), mp.mpf(b2)  # keep b + n exact in the loop
            l4 = mp.log(4)
            acc = mp.mpf(0)
            for n in range(min_len):
                out.append(acc)
                acc = acc - l4 - mp.log(b1 + n) - mp.log(b2 + n)
    _mp_cache[family] = (dps, out)
    return out


def _ratio_formula(family: FunctionFamily):
    """Closed-form term ratio c_n / c_(n-1) as a callable of n, or None.

    Gamma quotients collapse to short rational products whenever the
    argument stride is a whole number, and the q-series ratio is elementary;
    building ratios this way skips every loggamma and exp, which is what
    makes repeated precision-tier rebuilds affordable.
    """
    import mpmath as mp

    if isinstance(family, (Lommel, Struve)):
        if isinstance(family, Lommel):
            b1, b2 = _lommel_params(family.u)
        else:
            b1, b2 = 1.5, family.beta + 1.5
        b1m, b2m = mp.mpf(b1), mp.mpf(b2)
        return lambda n: 1 / (4 * (b1m + (n - 1)) * (b2m + (n - 1)))
    if isinstance(family, Wright) and float(family.rho).is_integer() and family.rho >= 1:
        p = int(family.rho)
        bm = mp.mpf(family.beta)

        def wright_ratio(n: int):
            den = mp.mpf(n)
            base = p * n + bm
            for i in range(1, p + 1):
                den *= base - i
            return 1 / den

        return wright_ratio
    if isinstance(family, MittagLeffler) and float(family.mu).is_integer() and family.mu >= 1:
        m = int(family.mu)
        am, nm = mp.mpf(family.a), mp.mpf(family.nu)

        def ml_ratio(n: int):
            den = mp.mpf(n)
            base = m * n + nm
            for i in range(1, m + 1):
                den *= base - i
            return (am + (n - 1)) / den

        return ml_ratio
    if isinstance(family, RamanujanQ):
        qm, am, bm = mp.mpf(family.q), mp.mpf(family.a), mp.mpf(family.beta)
        return lambda n: qm ** (bm * (2 * n - 1)) * (1 + am * qm ** (n - 1)) / (1 - qm**n)
    return None


def _dps_tier(dps: int) -> int:
    tier = 50
    while tier < dps:
        tier *= 2
    return tier


def term_ratios_mp(family: FunctionFamily, dps: int, min_len: int):
    """mpf ratios c_n / c_(n-1) (index 0 unused) and their precision.

    Summing term_n = term_(n-1) * ratio_n * w replaces one mp.exp per term
    per evaluation with one mp multiply.  The cache is built at the next
    multiplicative precision tier at or above the request and is extended in
    place as scans reach further out, so the returned list only changes
    identity when the tier itself jumps.  Returns (ratios, tier_dps).
    """
    import mpmath as mp

    cached = _mp_ratio_cache.get(family)
    tier = _dps_tier(dps)
    if cached is not None:
        tier = max(tier, cached[0])
        if cached[0] >= dps and len(cached[1]) >= min_len:
            return cached[1], cached[0]
    want = max(min_len + 64, int(1.15 * min_len))
    formula = _ratio_formula(family)
    if formula is not None:
        out = cached[1] if cached is not None and cached[0] == tier else [mp.mpf(0)]
        with mp.workdps(tier):
            for n in range(len(out), want + 1):
                out.append(formula(n))
    else:
        lcs = log_coeffs_mp(family, tier, want + 1)
        with mp.workdps(tier + 10):
            out = [mp.mpf(0)]
            for n in range(1, len(lcs)):
                out.append(mp.exp(lcs[n] - lcs[n - 1]))
    _mp_ratio_cache[family] = (tier, out)
    return out, tier
