"""Positive zeros of the even kernels and of their derivative kernels.

Every table is built from one scalar function of t > 0,

    G(t) = a*B(w) + b*w*B'(w),   w = -t^2,

with kind-specific weights (a, b): the base kernel itself is (1, 0); the
derivative of the weighted kernel z^kappa K(z) gives (kappa, 2) after
dividing by z^(kappa-1); the derivative of g(z) = z K(z) gives (1, 2); and
the derivative of h(z) = z B(-z), written in the variable s = sqrt(z), gives
(1, 1).  These are the explicitly differentiated normalized series, reduced
by hand to the common two-term shape.  For h_prime tables zeros are stored
in the sqrt variable: h' vanishes at z = zeros[n]**2.

Scanning works on the scaled value G(t) e^-M(t) (see series_eval), so signs
and residual certificates survive arbitrarily large kernel magnitudes.  Four
families (Wright, Mittag-Leffler, Lommel, Struve) lose all significant
digits to cancellation at large t; their far zeros are polished with
high-precision sums whose working precision tracks the peak term.

Each kind also satisfies an exact first-moment identity

    sum over zeros of mult/zero^2 = c_1 (a + b)/a,

which supplies rigorous tail bounds for truncated sums and products over the
table and doubles as a bookkeeping check that the scan missed nothing big.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

try:  # pragma: no cover - exercised indirectly through the fast path
    import gmpy2 as _gmpy
except ImportError:  # pure-mpmath fallback keeps results identical, slower
    _gmpy = None

from . import _coeffs
from .errors import BracketingError, ParameterError, TableError
from .families import (
    FunctionFamily,
    Legendre,
    Lommel,
    MittagLeffler,
    RamanujanQ,
    Struve,
    Wright,
    form_weight,
)
from .series_eval import scaled_kernel

KINDS = ("base", "weighted_derivative", "g_prime", "h_prime")

RESIDUAL_TOL = 1e-11
# Peak-term log beyond which double-precision residuals cannot certify to
# RESIDUAL_TOL: summation noise is ~1e-14 of the peak while the residual is
# measured against max(e^-M, slope scale), so e^-M must stay >= 100x above
# the noise.  Signs stay resolvable far longer (~e^21); this bound is about
# certificates, not correctness of the scan.
_MP_SWITCH_LOGM = 4.0
_MP_FAMILIES = (Wright, MittagLeffler, Lommel, Struve)
# The q-series kernel barely cancels near its zeros (the scaled slope stays
# O(1)), so doubles hold much further; what eventually fails is the absolute
# ~M * eps error of forming log-scaled exponents.  Hand off once that error
# approaches 1e-13.
_Q_MP_SWITCH_LOGM = 200.0
_CEILING_CAP = 1e75
# Give up when the scan has travelled this many predicted gaps past the last
# zero (or this many first-zero scales with none found): kernels outside the
# real-zero parameter ranges run out of sign changes, and without a stop the
# scan would escalate precision forever hunting a zero that is not there.
_TRAVEL_GAPS = 50.0
_FIRST_TRAVEL = 200.0
_LN10 = math.log(10.0)


@dataclass(frozen=True)
class ZeroTable:
    """First N positive zeros of one kind of kernel, with certificates.

    residuals are dimensionless: |G(zero)| / max(e^-M, |G'(zero)|*zero) with
    everything measured on the peak-term scale, so a residual of 1e-12 means
    the value at the recorded zero is 12 orders below the local slope scale.
    coverage_remainder is the first-moment budget left beyond the table,
    sum_{n>N} mult/zero^2, computed exactly from c_1; it feeds tail bounds.
    variable is "z" except for h_prime tables, which live in sqrt(z).
    """

    family: FunctionFamily
    kind: str
    zeros: tuple[float, ...]
    residuals: tuple[float, ...]
    scan_ceiling: float
    multiplicities: tuple[int, ...]
    coverage_remainder: float
    variable: str

    def __len__(self) -> int:
        return len(self.zeros)

    @property
    def first(self) -> float:
        return self.zeros[0]

    @property
    def degenerate(self) -> bool:
        return any(m > 1 for m in self.multiplicities)


@dataclass(frozen=True)
class InterlacingReport:
    """Result of a strict interlacing check between two tables."""

    ok: bool
    pairs_checked: int
    violations: tuple[tuple[int, float, float, float], ...]
    degenerate: bool

    def __bool__(self) -> bool:
        return self.ok


def kind_weights(family: FunctionFamily, kind: str) -> tuple[float, float]:
    """Weights (a, b) of G(t) = a B(w) + b w B'(w) for a table kind."""
    if kind == "base":
        return 1.0, 0.0
    if kind == "weighted_derivative":
        return form_weight(family), 2.0
    if kind == "g_prime":
        return 1.0, 2.0
    if kind == "h_prime":
        return 1.0, 1.0
    raise ParameterError(f"unknown table kind {kind!r}; expected one of {KINDS}")


def zero_budget(family: FunctionFamily, kind: str) -> float:
    """Exact value of sum mult/zero^2 over all positive zeros of the kind."""
    a, b = kind_weights(family, kind)
    return _coeffs.c1(family) * (a + b) / a


def _g_eval_double(family: FunctionFamily, a: float, b: float, t: float):
    w = -t * t
    b0, b1, b2, M, *_ = scaled_kernel(family, w)
    g = a * b0 + b * w * b1
    dg = -2.0 * t * ((a + b) * b1 + b * w * b2)
    return g, dg, M


_gmpy_ratio_cache: dict[FunctionFamily, tuple[object, list]] = {}


def _gmpy_ratio_list(family: FunctionFamily, ratios, tier: int):
    """The mpmath ratio list converted to raw mpfr values, losslessly.

    Keyed on the identity of the source list: term_ratios_mp extends its
    cache in place, so a matching identity means only the tail is new, and a
    fresh identity (precision tier jump) forces a full reconversion.  The
    conversion context carries the source precision so nothing is rounded.
    """
    src, out = _gmpy_ratio_cache.get(family, (None, None))
    if src is not ratios:
        out = [None]
    if len(out) < len(ratios):
        saved = _gmpy.get_context()
        _gmpy.set_context(_gmpy.context(precision=int(tier * 3.3219281) + 32))
        try:
            for r in ratios[len(out) :]:
                sgn, man, exp, _ = r._mpf_
                v = _gmpy.mpfr(int(man))
                v = _gmpy.mul_2exp(v, exp) if exp >= 0 else _gmpy.div_2exp(v, -exp)
                out.append(-v if sgn else v)
        finally:
            _gmpy.set_context(saved)
        _gmpy_ratio_cache[family] = (ratios, out)
    return out


def _g_eval_mp(family: FunctionFamily, a: float, b: float, t: float):
    """High-precision G and dG/dt on the same e^-M scale, returned as floats.

    Terms are kept down to absolute size e^-50 (not peak-relative), because
    after cancellation the value is O(1)-sized while the peak is e^M.  The
    inner product-sum runs on raw gmpy2 mpfr values when available (several
    times faster than the wrapped equivalent); the mpmath loop below computes
    the identical sum otherwise.
    """
    import mpmath as mp

    lw = 2.0 * math.log(t)
    M, ncut = _coeffs.log_max_term(family, lw, drop=None, floor=-50.0)
    if isinstance(family, RamanujanQ):
        dps = 40  # only the |log|-sized roundoff needs beating, not M nats
    else:
        dps = 50 * int(math.ceil(((M + 50.0) / _LN10 + 12.0) / 50.0))
    ratios, tier = _coeffs.term_ratios_mp(family, dps, ncut + 1)
    if _gmpy is not None:
        saved = _gmpy.get_context()
        _gmpy.set_context(_gmpy.context(precision=int(dps * 3.3219281) + 16))
        try:
            rat = _gmpy_ratio_list(family, ratios, tier)
            w = -(_gmpy.mpfr(t) ** 2)
            term = _gmpy.mpfr(1)
            s0, s1, s2 = term, _gmpy.mpfr(0), _gmpy.mpfr(0)
            if b == 0.0:  # dG needs only the first moment then
                for n in range(1, ncut + 1):
                    term = term * rat[n] * w
                    s0 += term
                    s1 += n * term
            else:
                for n in range(1, ncut + 1):
                    term = term * rat[n] * w
                    s0 += term
                    s1 += n * term
                    s2 += (n * (n - 1)) * term
            scale = _gmpy.exp(_gmpy.mpfr(-M))
            g = float((a * s0 + b * s1) * scale)
            dg = float(-2 * t * ((a + b) * s1 + b * s2) / w * scale)
        finally:
            _gmpy.set_context(saved)
        return g, dg, M
    with mp.workdps(dps):
        w = -(mp.mpf(t) ** 2)
        term = mp.mpf(1)
        s0, s1, s2 = term, mp.mpf(0), mp.mpf(0)
        for n in range(1, ncut + 1):
            term = term * ratios[n] * w
            s0 += term
            s1 += n * term
            s2 += (n * (n - 1)) * term
        scale = mp.exp(-mp.mpf(M))
        g = float((a * s0 + b * s1) * scale)
        dg = float(-2 * t * ((a + b) * s1 + b * s2) / w * scale)
    return g, dg, M


def _legendre_eval(family: Legendre, a: float, b: float):
    """G and dG/dt from the stable three-term polynomial recurrence.

    The raw coefficient series of a high-degree polynomial kernel cancels
    catastrophically in doubles, while the recurrence stays O(1) on the whole
    zero range, so Legendre tables never touch the series path.
    """
    from .series_eval import _legendre_recurrence

    d = family.degree
    c_norm = 1.0 / _legendre_recurrence(d, 0.0)[1]  # makes B(0) = 1
    a1 = a - 0.5 * b
    b1 = 0.5 * b

    def ev(t: float):
        p, dp, d2p = _legendre_recurrence(d, t)
        num = a1 * p + b1 * t * dp
        dnum = (a1 + b1) * dp + b1 * t * d2p
        g = c_norm * num / t
        dg = c_norm * (dnum * t - num) / (t * t)
        return g, dg, 0.0

    return ev


def _make_eval(family: FunctionFamily, a: float, b: float):
    if isinstance(family, Legendre):
        return _legendre_eval(family, a, b)
    if isinstance(family, RamanujanQ):
        switch = _Q_MP_SWITCH_LOGM
    elif isinstance(family, _MP_FAMILIES):
        switch = _MP_SWITCH_LOGM
    else:
        switch = math.inf
    t_far = math.inf  # peak log grows with t, so the handoff point is a threshold

    def ev(t: float):
        nonlocal t_far
        if t >= t_far:
            return _g_eval_mp(family, a, b, t)
        g, dg, M = _g_eval_double(family, a, b, t)
        if M > switch:
            t_far = t
            return _g_eval_mp(family, a, b, t)
        return g, dg, M

    return ev


def _sign(x: float) -> float:
    return 1.0 if x > 0 else -1.0


def _refine(ev, lo: float, g_lo: float, hi: float, g_hi: float) -> float:
    """Shrink a sign-change bracket: bisect to 1e-6 relative, then polish.

    ev(t) -> (value, slope, M).  A slope of None switches the polish from
    Newton to secant (used when hunting zeros of G', whose own slope the
    evaluator does not provide).
    """
    if _sign(g_lo) == _sign(g_hi):
        raise BracketingError("refine called without a sign change")
    s_lo = _sign(g_lo)
    while hi - lo > 1e-6 * hi:
        mid = 0.5 * (lo + hi)
        g, _, _ = ev(mid)
        if g == 0.0:
            return mid
        if _sign(g) == s_lo:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    t_prev = lo
    g_prev = None
    for _ in range(8):
        g, dg, _ = ev(t)
        if g == 0.0:
            return t
        if _sign(g) == s_lo:
            lo = t
        else:
            hi = t
        slope = dg
        if slope is None and g_prev is not None and t != t_prev:
            slope = (g - g_prev) / (t - t_prev)
        t_prev, g_prev = t, g
        if slope is None or slope == 0.0:
            t = 0.5 * (lo + hi)
            continue
        step = g / slope
        t_new = t - step
        # converged when the raw step is sub-ulp; test before any clamping,
        # or a step landing exactly on a bracket edge bounces to midpoint
        if abs(step) <= 2e-16 * t:
            return t_new if lo <= t_new <= hi else t
        if not (lo < t_new < hi):
            t_new = 0.5 * (lo + hi)
        t = t_new
    return t


def _golden_min_abs(ev, lo: float, hi: float, iters: int = 34):
    """Golden-section minimum of |G| on [lo, hi]; returns (t, G(t))."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    f1 = abs(ev(x1)[0])
    f2 = abs(ev(x2)[0])
    for _ in range(iters):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - invphi * (hi - lo)
            f1 = abs(ev(x1)[0])
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + invphi * (hi - lo)
            f2 = abs(ev(x2)[0])
    t = x1 if f1 <= f2 else x2
    g, _, _ = ev(t)
    return t, g


class _Scan:
    """Stateful left-to-right zero scan with dip handling and acceleration."""

    def __init__(self, family, kind, n_request, ceiling, strict):
        self.family = family
        self.kind = kind
        self.n_request = n_request
        a, b = kind_weights(family, kind)
        self.a, self.b = a, b
        c1v = _coeffs.c1(family)
        if c1v <= 0.0:
            raise TableError(f"{family.label()}: kernel has no positive zeros")
        self.scale = math.sqrt(a / ((a + b) * c1v))
        self.ev = _make_eval(family, a, b)
        self.strict = strict
        self.ceiling = ceiling
        self.extensions = 0
        self.zeros: list[float] = []
        self.mults: list[int] = []
        self.res: list[float] = []
        self.gap = None
        self.gap_prev = None
        self.max_probe = 0.0
        # q-series zeros space out geometrically with ratio ~ q^-beta, which
        # can exceed the generic gap-growth clip and starve the predictor
        self.ratio_hi = 4.0
        if isinstance(family, RamanujanQ):
            self.ratio_hi = max(4.0, 1.2 * family.q ** (-family.beta))

    # -- bookkeeping ------------------------------------------------------

    def _probe(self, t: float):
        out = self.ev(t)
        if t > self.max_probe:
            self.max_probe = t
        return out

    def _residual(self, t: float, mult: int = 1) -> float:
        g, dg, M = self._probe(t)
        floor = math.exp(-M) if M < 700.0 else 0.0
        if mult == 1:
            return abs(g) / max(floor, abs(dg) * t, 1e-300)
        # double zero: measure against the curvature scale instead
        d = 1e-3 * t
        gp = self._probe(t + d)[0]
        gm = self._probe(t - d)[0]
        curv = abs(gp + gm - 2.0 * g) / (d * d)
        return abs(g) / max(floor, 0.5 * curv * t * t, 1e-300)

    def _accept(self, zeta: float, mult: int, residual: float):
        if self.zeros and zeta <= self.zeros[-1]:
            raise TableError(
                f"{self.family.label()} {self.kind}: zero ordering broke at {zeta!r}"
            )
        if residual > RESIDUAL_TOL:
            raise TableError(
                f"{self.family.label()} {self.kind}: residual {residual:.2e} "
                f"at zero {zeta!r} exceeds {RESIDUAL_TOL}"
            )
        prev = self.zeros[-1] if self.zeros else 0.0
        self.zeros.append(zeta)
        self.mults.append(mult)
        self.res.append(residual)
        self.gap_prev, self.gap = self.gap, zeta - prev

    def _recent_gaps(self, k: int) -> list[float]:
        z = self.zeros
        lo = max(1, len(z) - k)
        out = [z[i] - z[i - 1] for i in range(lo, len(z))]
        if len(out) < k and z:
            out.insert(0, z[0])
        return out

    def _alternating(self) -> bool:
        """Gaps repeating with period two, as some kernels genuinely have."""
        g = self._recent_gaps(4)
        return (
            len(g) == 4
            and abs(g[3] - g[1]) <= 0.05 * g[3]
            and abs(g[2] - g[0]) <= 0.05 * g[2]
        )

    def _gap_hat(self) -> float:
        if self.gap is None:
            return self.scale
        if self._alternating():
            g = self._recent_gaps(4)
            # period-two comb: repeat the gap before last, drift-corrected
            return g[2] * min(max(g[3] / g[1], 0.5), 2.0)
        if self.gap_prev is None or self.gap_prev <= 0.0:
            return self.gap
        ratio = self.gap / self.gap_prev
        return self.gap * min(max(ratio, 0.5), self.ratio_hi)

    def _ensure_ceiling(self, t_need: float) -> bool:
        if t_need <= self.ceiling:
            return True
        if self.strict:
            return False
        while self.ceiling < t_need:
            self.ceiling *= 4.0
            self.extensions += 1
            if self.ceiling > _CEILING_CAP or self.extensions > 400:
                raise TableError(
                    f"{self.family.label()} {self.kind}: gave up extending the "
                    f"scan ceiling past {self.ceiling:.3g}"
                )
        return True

    # -- acceleration for long regular tables -----------------------------

    def _gaps_regular(self) -> bool:
        if len(self.zeros) < 4 or any(m > 1 for m in self.mults):
            return False
        if self._alternating():
            return True
        g3 = [
            self.zeros[-3] - self.zeros[-4],
            self.zeros[-2] - self.zeros[-3],
            self.zeros[-1] - self.zeros[-2],
        ]
        return max(g3) <= 1.6 * min(g3) or (
            # geometric growth with a steady ratio is also predictable
            abs(g3[2] / g3[1] - g3[1] / g3[0]) <= 0.1 * (g3[2] / g3[1])
        )

    def _try_predicted(self, sgn_before: float) -> bool:
        """Newton from the predicted next abscissa; certified or rejected."""
        ghat = self._gap_hat()
        anchor = self.zeros[-1]
        t = anchor + ghat
        if not self._ensure_ceiling(anchor + 2.2 * ghat):
            return False
        lo_lim, hi_lim = anchor + 0.25 * ghat, anchor + 2.2 * ghat
        for _ in range(9):
            g, dg, _ = self._probe(t)
            if dg == 0.0:
                return False
            step = g / dg
            t_new = t - step
            if not (lo_lim < t_new < hi_lim):
                return False
            # quadratic convergence: with the gap as the curvature scale the
            # error left after this step is ~step^2/ghat, and once that is an
            # order under what the residual certificate tolerates (tol * t)
            # no more polish is needed
            if abs(step) <= 1e-13 * t or 3.0 * step * step / ghat <= 0.1 * RESIDUAL_TOL * t:
                t = t_new
                break
            t = t_new
        else:
            return False
        d = 1e-9 * t
        gm, _, M = self._probe(t - d)
        gp = self._probe(t + d)[0]
        if gm == 0.0 or gp == 0.0 or _sign(gm) == _sign(gp):
            return False
        if _sign(gm) != sgn_before:
            return False  # landed on a zero with the wrong orientation
        # certificate straight from the bracketing probes: their secant is
        # the slope scale and their midpoint value bounds |G(t)| from above
        # up to curvature, which only overestimates the residual
        floor = math.exp(-M) if M < 700.0 else 0.0
        slope = abs(gp - gm) / (2.0 * d)
        residual = 0.5 * abs(gp + gm) / max(floor, slope * t, 1e-300)
        zeta = t
        if residual > RESIDUAL_TOL:
            # the center missed by more than the certificate allows; slide
            # to the secant root inside the pair and certify it directly
            zeta = t - d + 2.0 * d * abs(gm) / (abs(gm) + abs(gp))
            residual = self._residual(zeta)
            if residual > RESIDUAL_TOL:
                return False
        self._accept(zeta, 1, residual)
        return True

    # -- dips (double zeros or close pairs) -------------------------------

    def _handle_dip(self, t1, g1, d1, t3, g3, d3) -> bool:
        """Resolve an interior extremum of G pointing toward zero.

        Either two simple zeros hide between the probes (the minimum of |G|
        crosses sign) or G grazes the axis in a double zero (a simple zero of
        G' certified against the curvature scale); anything shallower is a
        benign dip and the scan moves on.
        """
        tc, gc = _golden_min_abs(self._probe, t1, t3)
        if gc != 0.0 and _sign(gc) != _sign(g1):
            z1 = _refine(self._probe, t1, g1, tc, gc)
            self._accept(z1, 1, self._residual(z1))
            z2 = _refine(self._probe, tc, gc, t3, g3)
            self._accept(z2, 1, self._residual(z2))
            return True
        if d1 == 0.0:
            t1 *= 1.0 - 1e-9
            d1 = self._probe(t1)[1]
        if d3 == 0.0:
            t3 *= 1.0 + 1e-9
            d3 = self._probe(t3)[1]
        if d1 == 0.0 or d3 == 0.0 or _sign(d1) == _sign(d3):
            return False

        def ev_deriv(t):
            g, dg, M = self._probe(t)
            return dg, None, M

        tc2 = _refine(ev_deriv, t1, d1, t3, d3)
        residual = self._residual(tc2, mult=2)
        if residual <= RESIDUAL_TOL:
            self._accept(tc2, 2, residual)
            return True
        return False  # a benign dip that never reaches zero

    def _check_travel(self, t: float):
        if self.zeros:
            limit = self.zeros[-1] + _TRAVEL_GAPS * max(self._gap_hat(), self.scale)
            if t <= limit:
                return
            raise TableError(
                f"{self.family.label()} {self.kind}: no sign change within "
                f"{_TRAVEL_GAPS:g} predicted gaps past zero {len(self.zeros)} "
                f"(t ~ {t:.6g}); the kernel appears to have only "
                f"{len(self.zeros)} real zeros, {self.n_request} were requested"
            )
        if t > _FIRST_TRAVEL * self.scale:
            raise TableError(
                f"{self.family.label()} {self.kind}: no zero within "
                f"{_FIRST_TRAVEL:g} first-zero scales (t ~ {t:.6g}); "
                f"the kernel appears to have no real zeros"
            )

    # -- main loop ---------------------------------------------------------

    def run(self):
        t = 1e-3 * self.scale
        g, dg, _ = self._probe(t)
        if g <= 0.0:
            raise BracketingError(
                f"{self.family.label()} {self.kind}: kernel not positive near 0"
            )
        h = self.scale / 20.0
        sgn_next = _sign(g)  # sign G carries into the next zero
        anchored = True
        while len(self.zeros) < self.n_request:
            if self._gaps_regular() and self._try_predicted(sgn_next):
                # a simple zero flips the sign; stepping state is refreshed
                # lazily, only if the predictor later gives up
                sgn_next = -sgn_next
                anchored = False
                continue
            if not anchored:
                zeta = self.zeros[-1]
                t = zeta * (1.0 + 1e-9)
                g, dg, _ = self._probe(t)
                if g == 0.0:
                    t = zeta + 1e-6 * self._gap_hat()
                    g, dg, _ = self._probe(t)
                h = self._gap_hat() / 6.0
                anchored = True
            self._check_travel(t)
            t_next = t + h
            if not self._ensure_ceiling(t_next):
                # hard ceiling: check the last sliver [t, ceiling] before quitting
                if t < self.ceiling:
                    g_c = self._probe(self.ceiling)[0]
                    if g_c != 0.0 and _sign(g_c) != _sign(g):
                        zeta = _refine(self._probe, t, g, self.ceiling, g_c)
                        self._accept(zeta, 1, self._residual(zeta))
                break
            g_next, dg_next, _ = self._probe(t_next)
            if g_next == 0.0:
                t_next *= 1.0 + 1e-12
                g_next, dg_next, _ = self._probe(t_next)
            if _sign(g_next) != _sign(g):
                zeta = _refine(self._probe, t, g, t_next, g_next)
                self._accept(zeta, 1, self._residual(zeta))
                h = self._gap_hat() / 6.0
                t, g, dg = t_next, g_next, dg_next
                sgn_next = _sign(g)
                continue
            # same sign at both ends but the slope flipped toward the axis:
            # a local extremum of G pointing at zero sits between the probes.
            # Healthy oscillation only produces extrema pointing away, so
            # this is the (step-size independent) signature of a grazing
            # double zero or a stepped-over close pair.
            if (
                _sign(dg) != _sign(g)
                and _sign(dg_next) == _sign(g)
                and self._handle_dip(t, g, dg, t_next, g_next, dg_next)
            ):
                h = self._gap_hat() / 6.0
            t, g, dg = t_next, g_next, dg_next
            sgn_next = _sign(g)
            cap = 0.3 * self.scale if self.gap is None else 0.5 * self._gap_hat()
            h = min(h * 1.1, max(cap, h))
        return self


def positive_zeros(
    family: FunctionFamily,
    kind: str,
    N: int,
    ceiling: float | None = None,
) -> ZeroTable:
    """First N positive zeros of the requested kernel kind, certified.

    With ceiling=None the scan ceiling starts at min(50 * first-zero scale,
    500) and extends itself until N zeros are found; passing an explicit
    ceiling makes it a hard limit and finding fewer than N zeros below it is
    a TableError.  Legendre tables are finite: each kind has exactly n - 1
    positive zeros and asking for more is an error, not padding.
    """
    if kind not in KINDS:
        raise ParameterError(f"unknown table kind {kind!r}; expected one of {KINDS}")
    if N < 1:
        raise ParameterError("N must be a positive integer")
    if isinstance(family, Legendre):
        available = family.n - 1
        if N > available:
            raise TableError(
                f"{family.label()}: polynomial kernel has only {available} "
                f"positive zeros, cannot deliver {N}"
            )
    a, b = kind_weights(family, kind)
    if a <= 0.0:
        raise ParameterError(
            f"{family.label()}: form weight {a:g} is not positive, "
            f"so {kind} zeros are undefined"
        )
    c1v = _coeffs.c1(family)
    if c1v <= 0.0:
        raise TableError(f"{family.label()}: kernel has no positive zeros")
    scale = math.sqrt(a / ((a + b) * c1v))
    strict = ceiling is not None
    start_ceiling = ceiling if strict else min(50.0 * scale, 500.0)
    scan = _Scan(family, kind, N, start_ceiling, strict).run()
    if len(scan.zeros) < N:
        raise TableError(
            f"{family.label()} {kind}: found {len(scan.zeros)} zeros below "
            f"ceiling {scan.ceiling:g}, requested {N}"
        )
    budget = c1v * (a + b) / a
    spent = sum(m / (z * z) for m, z in zip(scan.mults, scan.zeros))
    remainder = budget - spent
    if remainder < -1e-9 * budget:
        raise TableError(
            f"{family.label()} {kind}: zero first-moments exceed the series "
            f"budget ({spent:.12g} > {budget:.12g}); table is inconsistent"
        )
    return ZeroTable(
        family=family,
        kind=kind,
        zeros=tuple(scan.zeros),
        residuals=tuple(scan.res),
        scan_ceiling=max(scan.max_probe, scan.zeros[-1]),
        multiplicities=tuple(scan.mults),
        coverage_remainder=max(remainder, 0.0),
        variable="sqrt(z)" if kind == "h_prime" else "z",
    )


def check_interlacing(lower: ZeroTable, upper: ZeroTable) -> InterlacingReport:
    """Strict interlacing lower[n] < upper[n] < lower[n+1] over shared range.

    `lower` is the table expected to lead (derivative zeros), `upper` the one
    expected to follow (kernel zeros).  Tables with recorded multiplicity
    above 1 mark the report degenerate; the strict comparison still runs.
    """
    if lower.family != upper.family:
        raise ParameterError("interlacing check needs tables of one family")
    if len(lower) < 2 or len(upper) < 2:
        raise ParameterError("interlacing check needs at least 2 zeros per table")
    violations = []
    checked = 0
    for n in range(min(len(upper), len(lower))):
        up = upper.zeros[n]
        lo = lower.zeros[n]
        nxt = lower.zeros[n + 1] if n + 1 < len(lower) else math.inf
        checked += 1
        if not (lo < up < nxt):
            violations.append((n, lo, up, nxt if nxt != math.inf else float("nan")))
    degenerate = lower.degenerate or upper.degenerate
    return InterlacingReport(
        ok=not violations,
        pairs_checked=checked,
        violations=tuple(violations),
        degenerate=degenerate,
    )


def tail_sum_bounds(table: ZeroTable, x_sq: float) -> tuple[float, float]:
    """Rigorous enclosure of sum_{zeros beyond the table} x^2/(zero^2 - x^2).

    Uses the exact first-moment remainder T = coverage_remainder and the fact
    that every missing zero exceeds the last tabulated one:
    x^2 T <= sum <= x^2 T / (1 - x^2/last^2).  Requires x^2 < last^2.
    """
    last = table.zeros[-1]
    if x_sq < 0 or x_sq >= last * last:
        raise TableError("tail bounds need x^2 below the last tabulated zero^2")
    lo = x_sq * table.coverage_remainder
    hi = lo / (1.0 - x_sq / (last * last))
    return lo, hi


def hadamard_product_bounds(table: ZeroTable, t: float) -> tuple[float, float]:
    """Enclosure of the full zero product prod (1 - t^2/zero^2)^mult.

    The tabulated part is exact; the missing factors are bounded through the
    first-moment remainder, giving
    P_N e^-H <= product <= P_N e^-L with [L, H] = tail_sum_bounds(t^2).
    Only meaningful below the first zero (all factors positive).
    """
    if not 0 <= t < table.zeros[0]:
        raise TableError("product bounds need 0 <= t below the first zero")
    p = 1.0
    for z, m in zip(table.zeros, table.multiplicities):
        p *= (1.0 - t * t / (z * z)) ** m
    lo_s, hi_s = tail_sum_bounds(table, t * t)
    return p * math.exp(-hi_s), p * math.exp(-lo_s)
