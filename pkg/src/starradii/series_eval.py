"""Series evaluation for the six families, with certified truncation error.

Public surface: eval_base / eval_deriv return the raw named series (Wright,
three-parameter Mittag-Leffler, the Lommel/Struve 1F2 kernels, odd-degree
Legendre polynomials, the Ramanujan q-series) and its first two derivatives
at real or complex arguments, each with an absolute tail bound.

Internal surface: scaled_kernel / scaled_kernel_many expose the shared
log-scaled kernel triple (B, B', B'') that the zero tables, normalized
functionals and verification grids are built from.  Scaling by the peak
term keeps every quantity representable; only eval_base/eval_deriv ever
undo the scaling, and they refuse when the true value overflows a double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _coeffs
from ._backend import eval_b, eval_b_many
from .errors import ComputationError, KernelExhausted, ParameterError
from .families import (
    FAMILY_NAMES,
    FunctionFamily,
    Legendre,
    Lommel,
    MittagLeffler,
    RamanujanQ,
    Struve,
    Wright,
    form_weight,
)

__all__ = [
    "EvalResult",
    "eval_base",
    "eval_deriv",
    "scaled_kernel",
    "scaled_kernel_many",
    "FunctionFamily",
    "Wright",
    "MittagLeffler",
    "Lommel",
    "Struve",
    "Legendre",
    "RamanujanQ",
    "FAMILY_NAMES",
    "form_weight",
]

# exp() overflows just past 709; leave headroom for the scaled mantissa
_MAX_LOG_DOUBLE = 700.0


@dataclass(frozen=True)
class EvalResult:
    """A series value together with a bound on the discarded remainder."""

    value: complex
    abs_tail_bound: float
    terms_used: int


def scaled_kernel(family: FunctionFamily, w: complex):
    """Scaled (b0, b1, b2, M, tail0, tail1, tail2, terms) at one point.

    b0 = B(w) e^-M with M the log of the largest series term, so |b0| <= a
    few and b0 == 0 only at genuine kernel zeros.  Grows the coefficient
    cache as needed; the hard term cap surfaces as ConvergenceError.
    """
    complete = _coeffs.coeff_count(family) is not None
    logc = _coeffs.log_coeffs(family)
    while True:
        try:
            return eval_b(logc, w, complete)
        except KernelExhausted as exc:
            logc = _coeffs.log_coeffs(family, exc.needed)


def scaled_kernel_many(family: FunctionFamily, ws: np.ndarray):
    """Vectorized scaled_kernel over a grid; see _kernels_py.eval_b_many."""
    complete = _coeffs.coeff_count(family) is not None
    ws = np.asarray(ws, dtype=complex)
    logc = _coeffs.log_coeffs(family)
    if len(ws):
        # grow the cache once for the largest modulus instead of per point
        biggest = complex(ws[np.argmax(np.abs(ws))])
        while True:
            try:
                eval_b(logc, biggest, complete)
                break
            except KernelExhausted as exc:
                logc = _coeffs.log_coeffs(family, exc.needed)
    return eval_b_many(logc, ws, complete)


def _legendre_recurrence(degree: int, x: complex) -> tuple[complex, complex, complex]:
    """P_m(x), P'_m(x), P''_m(x) by Bonnet recursion and its derivatives."""
    p_prev, p = 1.0, x
    d_prev, d = 0.0, 1.0
    s_prev, s = 0.0, 0.0
    if degree == 0:
        return 1.0, 0.0, 0.0
    for m in range(2, degree + 1):
        p_new = ((2 * m - 1) * x * p - (m - 1) * p_prev) / m
        d_new = ((2 * m - 1) * (p + x * d) - (m - 1) * d_prev) / m
        s_new = ((2 * m - 1) * (2 * d + x * s) - (m - 1) * s_prev) / m
        p_prev, p = p, p_new
        d_prev, d = d, d_new
        s_prev, s = s, s_new
    return p, d, s


def _base_eval(family: FunctionFamily, x: complex, order: int) -> EvalResult:
    if isinstance(family, Legendre):
        p, d, s = _legendre_recurrence(family.degree, x)
        value = (p, d, s)[order]
        return EvalResult(value, 0.0, family.degree + 1)
    scale = _coeffs.base_arg_scale(family)
    log_pref = _coeffs.base_prefactor_log(family)
    w = scale * x if isinstance(x, complex) else scale * float(x)
    b0, b1, b2, M, t0, t1, t2, terms = scaled_kernel(family, w)
    picked = (b0, b1, b2)[order]
    tail = (t0, t1, t2)[order]
    total_log = M + log_pref
    if total_log > _MAX_LOG_DOUBLE:
        raise ComputationError(
            f"{family.label()}: series value exceeds double range "
            f"(log magnitude about {total_log:.0f})"
        )
    factor = math.exp(total_log) * scale**order
    # truncation plus summation roundoff (scaled max term is 1 by construction)
    roundoff = 2.3e-16 * float(terms) ** (order + 1)
    if w != 0:
        roundoff /= abs(w) ** order
    return EvalResult(picked * factor, (tail + roundoff) * factor, terms)


def eval_base(family: FunctionFamily, x: complex) -> EvalResult:
    """Value of the raw named series at x.

    Wright Phi(rho, beta, x); Mittag-Leffler M(mu, nu, a, x); the Lommel and
    Struve hypergeometric kernels 1F2(1; b1, b2; x); the Legendre polynomial
    of degree 2n-1; the Ramanujan q-series A(a, x).  abs_tail_bound is an
    absolute bound on the truncation remainder (zero for polynomials).
    """
    return _base_eval(family, x, 0)


def eval_deriv(family: FunctionFamily, order: int, x: complex) -> EvalResult:
    """First or second derivative of the raw named series at x."""
    if order not in (1, 2):
        raise ParameterError(f"derivative order must be 1 or 2, not {order!r}")
    return _base_eval(family, x, order)
