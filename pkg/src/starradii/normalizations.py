"""Normalized forms of the six families and their shape functionals.

Every family shares one kernel B(w) = sum c_n w^n with c_0 = 1, and the
normalized forms are

    f(z) = (z^k K(z))^(1/k),    g(z) = z K(z),    h(z) = z B(-z),

with K(z) = B(-z^2) and k the family form weight.  The starlike functional
S(z) = z f'(z)/f(z) and the convex functional C(z) = 1 + z f''(z)/f'(z)
reduce to ratios of (B, B', B'') at w = -z^2 (w = -z for the h form), so no
fractional power is ever evaluated and no branch choice arises:

    S_f = 1 + (2/k) w B'/B          C_f = 1 + 2w((k+2)B' + 2wB'')/(kB + 2wB')
    S_g = 1 + 2 w B'/B                        + (1/k - 1) 2w B'/B
    S_h = 1 + w B'/B                (C_g is C_f at k = 1; C_h is analogous
                                     in w = -z)

sum_over_zeros_functional rebuilds the same values from certified zero
tables with explicit two-sided tail enclosures.  The ratio path is primary;
the zero-sum path exists as an independent cross-check.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import ComputationError, ParameterError, PoleProximityError
from .families import FunctionFamily, Legendre, Struve, form_weight
from .series_eval import scaled_kernel, scaled_kernel_many
from .zero_tables import ZeroTable, tail_sum_bounds

__all__ = [
    "NormalizedFunction",
    "ZeroSumResult",
    "starlike_functional",
    "convex_functional",
    "starlike_many",
    "convex_many",
    "sum_over_zeros_functional",
]

_POLE_GUARD = 1e-12
_FORMS = ("f", "g", "h")
# Struve literature names its three forms U, V, W; the Legendre family is a
# single odd polynomial usually printed P.
_STRUVE_ALIASES = {"u": "f", "v": "g", "w": "h"}


def _canonical_form(family: FunctionFamily, form: str) -> str:
    low = str(form).lower()
    if low in _STRUVE_ALIASES:
        if not isinstance(family, Struve):
            raise ParameterError(
                f"form {form!r} is a Struve-only alias; use one of {_FORMS}"
            )
        return _STRUVE_ALIASES[low]
    if low == "p":
        if not isinstance(family, Legendre):
            raise ParameterError("form 'p' is the Legendre polynomial alias")
        return "g"
    if low not in _FORMS:
        raise ParameterError(f"unknown form {form!r}; expected one of {_FORMS}")
    return low


@dataclass(frozen=True)
class NormalizedFunction:
    """One family in one normalized form, value(z)/z -> 1 at the origin.

    form is stored canonically as "f", "g" or "h"; the constructor accepts
    the Struve aliases U/V/W and the Legendre alias "p" (for its g form, the
    only one that family has).  The f form needs a positive weight, which
    rules out Lommel parameters at or below -1/2.
    """

    family: FunctionFamily
    form: str

    def __post_init__(self) -> None:
        canon = _canonical_form(self.family, self.form)
        if isinstance(self.family, Legendre) and canon != "g":
            raise ParameterError(
                "the odd Legendre polynomial has a single normalized form; "
                "use form 'p' (or equivalently 'g')"
            )
        if canon == "f" and form_weight(self.family) <= 0:
            raise ParameterError(
                f"{self.family.label()}: f form needs a positive weight, "
                f"got {form_weight(self.family):g}"
            )
        object.__setattr__(self, "form", canon)

    @property
    def weight(self) -> float:
        """Form weight k; the f/g distinction only matters when k != 1."""
        return form_weight(self.family)

    def label(self) -> str:
        return f"{self.family.label()}:{self.form}"

    def _w(self, z: complex) -> complex:
        return -z if self.form == "h" else -(z * z)

    def value(self, z: complex) -> complex:
        """The normalized function itself, principal branch for the f form.

        Meant for display and normalization checks inside the first-zero
        disk; the functionals below never call it.
        """
        z = complex(z)
        if z == 0:
            return 0.0 + 0.0j
        b0, _, _, M, *_ = scaled_kernel(self.family, self._w(z))
        if M > 700.0:
            raise ComputationError(
                f"{self.label()}: kernel value exceeds double range at z = {z:.6g}"
            )
        kern = b0 * math.exp(M)
        if self.form == "f":
            k = self.weight
            if abs(kern) < _POLE_GUARD:
                raise PoleProximityError(
                    f"{self.label()}: kernel vanishes near z = {z:.6g}"
                )
            return z * cmath.exp(cmath.log(kern) / k)
        return z * kern


def _ratio(num: complex, den: complex, scale: float, nf: NormalizedFunction,
           z: complex, name: str) -> complex:
    if abs(den) <= _POLE_GUARD * max(1.0, scale):
        raise PoleProximityError(
            f"{nf.label()} {name} functional: denominator vanishes near "
            f"z = {z:.6g}; the point sits at or beyond a kernel zero"
        )
    return num / den


def starlike_functional(nf: NormalizedFunction, z: complex) -> complex:
    """z f'(z)/f(z) of the chosen form, from kernel ratios.

    Valid inside the disk bounded by the first positive kernel zero (its
    square for the h form); closer than ~1e-12 to a kernel zero raises
    PoleProximityError instead of returning a huge value.
    """
    z = complex(z)
    w = nf._w(z)
    b0, b1, _, *_ = scaled_kernel(nf.family, w)
    q = w * b1
    factor = {"f": 2.0 / nf.weight, "g": 2.0, "h": 1.0}[nf.form]
    return 1.0 + factor * _ratio(q, b0, abs(q), nf, z, "starlike")


def convex_functional(nf: NormalizedFunction, z: complex) -> complex:
    """1 + z f''(z)/f'(z) of the chosen form, from kernel ratios.

    Valid inside the disk bounded by the first zero of the corresponding
    derivative kernel; pole proximity raises as in starlike_functional.
    """
    z = complex(z)
    w = nf._w(z)
    b0, b1, b2, *_ = scaled_kernel(nf.family, w)
    if nf.form == "h":
        num = w * (2.0 * b1 + w * b2)
        den = b0 + w * b1
        scale = abs(b0) + abs(w * b1)
        return 1.0 + _ratio(num, den, scale, nf, z, "convex")
    k = 1.0 if nf.form == "g" else nf.weight
    num = 2.0 * w * ((k + 2.0) * b1 + 2.0 * w * b2)
    den = k * b0 + 2.0 * w * b1
    scale = abs(k * b0) + abs(2.0 * w * b1)
    out = 1.0 + _ratio(num, den, scale, nf, z, "convex")
    if k != 1.0:
        q = w * b1
        out += (1.0 / k - 1.0) * 2.0 * _ratio(q, b0, abs(q), nf, z, "convex")
    return out


def _grid_guard(den: np.ndarray, scale: np.ndarray, nf: NormalizedFunction,
                name: str) -> None:
    bad = np.abs(den) <= _POLE_GUARD * np.maximum(1.0, scale)
    if bad.any():
        raise PoleProximityError(
            f"{nf.label()} {name} grid: {int(bad.sum())} point(s) at or "
            "beyond a kernel zero"
        )


def starlike_many(nf: NormalizedFunction, zs: np.ndarray) -> np.ndarray:
    """starlike_functional over an array of points (one kernel sweep)."""
    zs = np.asarray(zs, dtype=complex)
    ws = -zs if nf.form == "h" else -(zs * zs)
    b0, b1, _, _, _, _ = scaled_kernel_many(nf.family, ws)
    q = ws * b1
    _grid_guard(b0, np.abs(q), nf, "starlike")
    factor = {"f": 2.0 / nf.weight, "g": 2.0, "h": 1.0}[nf.form]
    return 1.0 + factor * q / b0


def convex_many(nf: NormalizedFunction, zs: np.ndarray) -> np.ndarray:
    """convex_functional over an array of points (one kernel sweep)."""
    zs = np.asarray(zs, dtype=complex)
    ws = -zs if nf.form == "h" else -(zs * zs)
    b0, b1, b2, _, _, _ = scaled_kernel_many(nf.family, ws)
    if nf.form == "h":
        num = ws * (2.0 * b1 + ws * b2)
        den = b0 + ws * b1
        _grid_guard(den, np.abs(b0) + np.abs(ws * b1), nf, "convex")
        return 1.0 + num / den
    k = 1.0 if nf.form == "g" else nf.weight
    num = 2.0 * ws * ((k + 2.0) * b1 + 2.0 * ws * b2)
    den = k * b0 + 2.0 * ws * b1
    _grid_guard(den, np.abs(k * b0) + np.abs(2.0 * ws * b1), nf, "convex")
    out = 1.0 + num / den
    if k != 1.0:
        q = ws * b1
        _grid_guard(b0, np.abs(q), nf, "convex")
        out = out + (1.0 / k - 1.0) * 2.0 * q / b0
    return out


@dataclass(frozen=True)
class ZeroSumResult:
    """Partial zero-sum value of a functional with a certified tail bound.

    The true functional value lies within tail_bound of value in modulus:
    the discarded terms are bounded through the table's first-moment
    remainder on both sides.
    """

    value: complex
    tail_bound: float
    terms: int


_CONVEX_KIND = {"f": "weighted_derivative", "g": "g_prime", "h": "h_prime"}


def _pair_sum(table: ZeroTable, z_sq: complex) -> complex:
    return sum(
        m * 2.0 * z_sq / (zt * zt - z_sq)
        for zt, m in zip(table.zeros, table.multiplicities)
    )


def sum_over_zeros_functional(
    nf: NormalizedFunction,
    z: complex,
    table: ZeroTable,
    which: str,
    base_table: ZeroTable | None = None,
) -> ZeroSumResult:
    """S or C rebuilt from a zero table: partial sum plus tail enclosure.

    which is "starlike" (needs a base table) or "convex" (needs the
    derivative-kind table of the form: weighted_derivative for f, g_prime
    for g, h_prime for h).  The f-form convex value also sums over base
    zeros, with weight (1/k - 1), so it takes the base table as a second
    argument whenever k != 1.  Requires |z| strictly inside the table's
    first-zero disk (first zero squared for the h form).
    """
    z = complex(z)
    if which not in ("starlike", "convex"):
        raise ParameterError(f"which must be 'starlike' or 'convex', not {which!r}")
    if table.family != nf.family:
        raise ParameterError("zero table belongs to a different family")
    need = "base" if which == "starlike" else _CONVEX_KIND[nf.form]
    if table.kind != need:
        raise ParameterError(
            f"{which} sum for form {nf.form!r} needs a {need!r} table, "
            f"got {table.kind!r}"
        )
    x = abs(z)
    if nf.form == "h":
        # tables for h-form kinds live in sqrt(z): poles sit at zeros**2
        if x >= table.first**2:
            raise ParameterError("z outside the first-zero disk of the table")
        partial = sum(
            m * z / (zt * zt - z) for zt, m in zip(table.zeros, table.multiplicities)
        )
        _, hi = tail_sum_bounds(table, x)
        return ZeroSumResult(1.0 - partial, hi, len(table))
    if x >= table.first:
        raise ParameterError("z outside the first-zero disk of the table")
    z_sq = z * z
    _, hi = tail_sum_bounds(table, x * x)
    k = nf.weight if nf.form == "f" else 1.0
    if which == "starlike":
        factor = 1.0 / k if nf.form == "f" else 1.0
        return ZeroSumResult(1.0 - factor * _pair_sum(table, z_sq), factor * 2.0 * hi, len(table))
    value = 1.0 - _pair_sum(table, z_sq)
    tail = 2.0 * hi
    if nf.form == "f" and k != 1.0:
        if base_table is None:
            raise ParameterError(
                "f-form convex sum needs the base table as well (the 1/k - 1 "
                "term runs over base zeros)"
            )
        if base_table.family != nf.family or base_table.kind != "base":
            raise ParameterError("base_table must be a base-kind table of the family")
        if x >= base_table.first:
            raise ParameterError("z outside the first-zero disk of the base table")
        _, hi_base = tail_sum_bounds(base_table, x * x)
        value -= (1.0 / k - 1.0) * _pair_sum(base_table, z_sq)
        tail += abs(1.0 / k - 1.0) * 2.0 * hi_base
    return ZeroSumResult(value, tail, len(table))
