# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernel evaluation backend.

Mirror of _kernels_py.eval_b with the same scaled-return contract; see that
module for the contract documentation.  The complex path tracks the term
phase with a cos/sin recurrence, refreshed from libm every 64 terms so the
recurrence drift stays far below the alternating-series noise floor.
"""

from libc.math cimport atan2, cos, exp, fabs, log, sin

from .errors import KernelExhausted

cdef double TERM_DROP = 55.0
cdef double LOG_RATIO_MAX = -0.1053605156578263  # log(0.9)
cdef double RATIO_MAX = 0.9
cdef double NEG_INF = -1e308


cdef int _scan(double[::1] logc, double lw, bint complete,
               double* M_out) except -2:
    """Find the log-term peak and a safe last index; -2 signals exhaustion."""
    cdef double peak = NEG_INF
    cdef double prev = NEG_INF
    cdef double v
    cdef Py_ssize_t n, peak_n = 0, nlen = logc.shape[0]
    for n in range(nlen):
        v = logc[n] + n * lw
        if v > peak:
            peak = v
            peak_n = n
        elif n > peak_n and v < peak - TERM_DROP and v - prev <= LOG_RATIO_MAX:
            M_out[0] = peak
            return <int> n
        prev = v
    if complete:
        M_out[0] = peak
        return <int> (nlen - 1)
    raise KernelExhausted(2 * nlen)


cdef inline void _geom_tails(double v_last, double M, double m, double R,
                             double aw, double* t0, double* t1, double* t2):
    cdef double base, g1, g2, g3
    if R >= 1.0:
        t0[0] = t1[0] = t2[0] = 0.0
        return
    base = exp(v_last - M)
    g1 = R / (1.0 - R)
    g2 = R / ((1.0 - R) * (1.0 - R))
    g3 = R * (1.0 + R) / ((1.0 - R) * (1.0 - R) * (1.0 - R))
    t0[0] = base * g1
    t1[0] = base * (m * g1 + g2) / aw
    t2[0] = base * (m * m * g1 + 2.0 * m * g2 + g3) / (aw * aw)


def eval_b(double[::1] logc, w, bint complete=False):
    """Scaled B, B', B'' at a single real or complex point."""
    cdef double complex wc = w
    cdef bint want_complex = isinstance(w, complex)
    cdef Py_ssize_t nlen = logc.shape[0]
    cdef double c1v, c2v
    if wc == 0.0:
        c1v = exp(logc[1]) if nlen > 1 else 0.0
        c2v = exp(logc[2]) if nlen > 2 else 0.0
        if want_complex:
            return (1.0 + 0.0j, c1v + 0.0j, 2.0 * c2v + 0.0j,
                    0.0, 0.0, 0.0, 0.0, min(3, nlen))
        return 1.0, c1v, 2.0 * c2v, 0.0, 0.0, 0.0, 0.0, min(3, nlen)

    cdef double aw = abs(wc)
    cdef double lw = log(aw)
    cdef double M = 0.0
    cdef int last = _scan(logc, lw, complete, &M)
    cdef Py_ssize_t n
    cdef double mag, t, sgn, x
    cdef double s0 = 0.0, s1 = 0.0, s2 = 0.0
    cdef double s0i = 0.0, s1i = 0.0, s2i = 0.0
    cdef double theta, ct, st, pc, ps, pc_new, re, im
    cdef double t0 = 0.0, t1 = 0.0, t2 = 0.0
    cdef double R, v_last
    cdef double complex b0c, b1c, b2c

    if wc.imag == 0.0 and not want_complex:
        x = wc.real
        sgn = 1.0
        for n in range(last + 1):
            mag = exp(logc[n] + n * lw - M)
            t = mag if x > 0 else mag * sgn
            sgn = -sgn
            s0 += t
            s1 += n * t
            s2 += n * (n - 1) * t
        if not (complete and last == nlen - 1):
            R = exp(logc[last] - logc[last - 1] + lw) if last >= 1 else 0.0
            if R > RATIO_MAX:
                R = RATIO_MAX
            v_last = logc[last] + last * lw
            _geom_tails(v_last, M, <double> last, R, aw, &t0, &t1, &t2)
        return (s0, s1 / x, s2 / (x * x), M, t0, t1, t2, <int> (last + 1))

    theta = atan2(wc.imag, wc.real)
    ct = cos(theta)
    st = sin(theta)
    pc = 1.0
    ps = 0.0
    for n in range(last + 1):
        if n % 64 == 0:
            pc = cos(n * theta)
            ps = sin(n * theta)
        mag = exp(logc[n] + n * lw - M)
        re = mag * pc
        im = mag * ps
        s0 += re
        s0i += im
        s1 += n * re
        s1i += n * im
        s2 += n * (n - 1) * re
        s2i += n * (n - 1) * im
        pc_new = pc * ct - ps * st
        ps = pc * st + ps * ct
        pc = pc_new
    if not (complete and last == nlen - 1):
        R = exp(logc[last] - logc[last - 1] + lw) if last >= 1 else 0.0
        if R > RATIO_MAX:
            R = RATIO_MAX
        v_last = logc[last] + last * lw
        _geom_tails(v_last, M, <double> last, R, aw, &t0, &t1, &t2)
    b0c = s0 + 1j * s0i
    b1c = (s1 + 1j * s1i) / wc
    b2c = (s2 + 1j * s2i) / (wc * wc)
    return b0c, b1c, b2c, M, t0, t1, t2, <int> (last + 1)
