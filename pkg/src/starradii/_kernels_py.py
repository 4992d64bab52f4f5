"""Pure-python kernel evaluation backend.

Evaluates B, B' and B'' at one point from an array of log coefficients.  The
compiled backend in _kernels_c.pyx implements the identical contract; the
import-time switch lives in _backend.  Everything here is scaled: with
M = max_n log|c_n w^n|, the returned values are B(w) e^-M etc., so magnitudes
stay near unity no matter how violently the raw series overflows.  That makes
"is B zero here" an absolute test on the scaled value.

Returned tuple (shared contract for both backends):

    (b0, b1, b2, M, tail0, tail1, tail2, terms)

b0 = B(w) e^-M, b1 = B'(w) e^-M, b2 = B''(w) e^-M; tails bound the scaled
truncation error of each sum; terms is the number of series terms summed.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import KernelExhausted

# Truncate once terms sit this many nats below the running peak and the
# term ratio has fallen under RATIO_MAX (guards the geometric tail bound).
TERM_DROP = 55.0
RATIO_MAX = 0.9
_LOG_RATIO_MAX = math.log(RATIO_MAX)


def _scan(logc: np.ndarray, lw: float, complete: bool) -> tuple[float, int]:
    """One pass over log-terms: find the peak M and a safe last index."""
    peak = -math.inf
    peak_n = 0
    prev = -math.inf
    for n in range(len(logc)):
        v = logc[n] + n * lw
        if v > peak:
            peak, peak_n = v, n
        elif n > peak_n and v < peak - TERM_DROP and v - prev <= _LOG_RATIO_MAX:
            return peak, n
        prev = v
    if complete:
        return peak, len(logc) - 1
    raise KernelExhausted(2 * len(logc))


def _geom_tails(v_last: float, M: float, m: int, R: float, aw: float):
    """Geometric bounds on the scaled tails of the three sums past index m."""
    if R >= 1.0:  # complete polynomial path ends with no tail
        return 0.0, 0.0, 0.0
    base = math.exp(v_last - M)
    g1 = R / (1.0 - R)
    g2 = R / (1.0 - R) ** 2
    g3 = R * (1.0 + R) / (1.0 - R) ** 3
    t0 = base * g1
    t1 = base * (m * g1 + g2) / aw
    t2 = base * (m * m * g1 + 2.0 * m * g2 + g3) / (aw * aw)
    return t0, t1, t2


def eval_b(logc: np.ndarray, w: complex, complete: bool = False):
    """Scaled B, B', B'' at a single real or complex point."""
    wc = complex(w)
    if wc == 0.0:
        c1 = math.exp(logc[1]) if len(logc) > 1 else 0.0
        c2 = math.exp(logc[2]) if len(logc) > 2 else 0.0
        if isinstance(w, complex):
            return 1.0 + 0.0j, c1 + 0.0j, 2.0 * c2 + 0.0j, 0.0, 0.0, 0.0, 0.0, min(3, len(logc))
        return 1.0, c1, 2.0 * c2, 0.0, 0.0, 0.0, 0.0, min(3, len(logc))
    aw = abs(wc)
    lw = math.log(aw)
    M, last = _scan(logc, lw, complete)
    n = np.arange(last + 1)
    mag = np.exp(logc[: last + 1] + n * lw - M)
    if wc.imag == 0.0 and not isinstance(w, complex):
        x = float(wc.real)
        terms = mag if x > 0 else mag * np.where(n % 2 == 0, 1.0, -1.0)
        b0 = float(terms.sum())
        b1 = float((n * terms).sum()) / x
        b2 = float((n * (n - 1) * terms).sum()) / (x * x)
    else:
        theta = math.atan2(wc.imag, wc.real)
        terms = mag * np.exp(1j * theta * n)
        b0 = complex(terms.sum())
        b1 = complex((n * terms).sum()) / wc
        b2 = complex((n * (n - 1) * terms).sum()) / (wc * wc)
    if complete and last == len(logc) - 1:
        t0 = t1 = t2 = 0.0
    else:
        R = math.exp(logc[last] - logc[last - 1] + lw) if last >= 1 else 0.0
        t0, t1, t2 = _geom_tails(logc[last] + last * lw, M, last, min(R, RATIO_MAX), aw)
    return b0, b1, b2, M, t0, t1, t2, last + 1


def eval_b_many(logc: np.ndarray, ws: np.ndarray, complete: bool = False):
    """Scaled B, B', B'' over an array of points.

    Fast path when all points share one modulus (circle grids): a single scan
    fixes M and the cutoff, then one dense outer-product evaluation covers the
    whole grid.  Mixed moduli fall back to a per-point loop.

    Returns (b0s, b1s, b2s, Ms, tail0s, terms) with complex value arrays.
    """
    ws = np.asarray(ws, dtype=complex)
    moduli = np.abs(ws)
    npts = len(ws)
    if npts == 0:
        z = np.zeros(0, dtype=complex)
        return z, z.copy(), z.copy(), np.zeros(0), np.zeros(0), np.zeros(0, dtype=int)
    a0 = moduli.max()
    if a0 > 0 and moduli.min() >= a0 * (1.0 - 1e-12):
        lw = math.log(a0)
        M, last = _scan(logc, lw, complete)
        n = np.arange(last + 1)
        mag = np.exp(logc[: last + 1] + n * lw - M)
        thetas = np.angle(ws)
        phases = np.exp(1j * np.outer(n, thetas))
        b0 = phases.T @ mag
        s1 = phases.T @ (n * mag)
        s2 = phases.T @ (n * (n - 1) * mag)
        b1 = s1 / ws
        b2 = s2 / (ws * ws)
        if complete and last == len(logc) - 1:
            t0 = 0.0
        else:
            R = math.exp(logc[last] - logc[last - 1] + lw) if last >= 1 else 0.0
            t0, _, _ = _geom_tails(logc[last] + last * lw, M, last, min(R, RATIO_MAX), a0)
        return (
            b0,
            b1,
            b2,
            np.full(npts, M),
            np.full(npts, t0),
            np.full(npts, last + 1, dtype=int),
        )
    b0s = np.empty(npts, dtype=complex)
    b1s = np.empty(npts, dtype=complex)
    b2s = np.empty(npts, dtype=complex)
    Ms = np.empty(npts)
    t0s = np.empty(npts)
    terms = np.empty(npts, dtype=int)
    for i, w in enumerate(ws):
        b0, b1, b2, M, t0, _, _, k = eval_b(logc, complex(w), complete)
        b0s[i], b1s[i], b2s[i], Ms[i], t0s[i], terms[i] = b0, b1, b2, M, t0, k
    return b0s, b1s, b2s, Ms, t0s, terms
