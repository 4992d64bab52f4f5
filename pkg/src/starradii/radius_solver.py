"""Radius solvers for the normalized families.

Three problems share one mechanism.  starlike_radius finds the largest r
with S(|z| < r) inside the disk {w : |w - 1| < alpha} of a target domain,
which by monotone decrease of S on the real axis is the unique root of
S(r) = 1 - alpha below the first kernel zero.  convex_radius does the same
for C below the first derivative-kernel zero.  strongly_starlike_radius
solves the sector condition T(r) = 0 with

    T(r) = c * sum_n m_n (zero_n^2 r^2 + s r^4)/(zero_n^4 - r^4) - s,

s = sin(pi eps/2) and c the form factor (2/k, 2, 1 for f, g, h; the h sums
run in z against squared zeros).  The two theorem sums collapse through the
kernel log-derivative Q(w) = w B'(w)/B(w) to

    sum zero^2 r^2/(zero^4 - r^4) = (A + B)/4,    A = -2 Q(-r^2),
    sum r^4/(zero^4 - r^4)        = (A - B)/4,    B = +2 Q(+r^2),

so T is evaluated to full precision from two kernel calls; the zero-table
partial sum with its tail enclosure is recorded as a cross-check.

Root finding is a safeguarded hybrid: verify the sign change, bisect to a
short bracket, then Newton with central differences, falling back to
bisection whenever a step leaves the bracket.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import (
    BracketingError,
    ConvergenceError,
    ParameterError,
    PoleProximityError,
)
from .families import FunctionFamily, Legendre, Lommel, MittagLeffler, Struve
from .normalizations import (
    NormalizedFunction,
    convex_functional,
    starlike_functional,
)
from .series_eval import scaled_kernel
from .target_domains import TargetDomain, alpha_of, wi_membership
from .zero_tables import ZeroTable, positive_zeros, tail_sum_bounds

__all__ = [
    "RadiusResult",
    "Starlike",
    "Convex",
    "StronglyStarlike",
    "RadiusQuery",
    "starlike_radius",
    "convex_radius",
    "strongly_starlike_radius",
    "solve",
]

_RESID_TOL = 1e-12
_CERT_TOL = 1e-10
_CONVEX_KIND = {"f": "weighted_derivative", "g": "g_prime", "h": "h_prime"}
# first zeros are reused across every solve on the same family
_first_zero_cache: dict[tuple[FunctionFamily, str], float] = {}


@dataclass(frozen=True)
class RadiusResult:
    """A certified radius root.

    residual is |equation value| at the radius; bracket is the final
    enclosing interval; alpha_used records the disk radius (or epsilon for
    the sector problem) actually solved against; notes carry provenance
    remarks such as the framework-derived label or membership warnings.
    """

    radius: float
    residual: float
    bracket: tuple[float, float]
    iterations: int
    alpha_used: float
    notes: str = ""


@dataclass(frozen=True)
class Starlike:
    domain: TargetDomain


@dataclass(frozen=True)
class Convex:
    domain: TargetDomain


@dataclass(frozen=True)
class StronglyStarlike:
    epsilon: float

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon <= 1.0:
            raise ParameterError(
                f"sector exponent must lie in (0, 1], got {self.epsilon}"
            )


@dataclass(frozen=True)
class RadiusQuery:
    """A solvable (function, problem) pair; see solve()."""

    nf: NormalizedFunction
    problem: Starlike | Convex | StronglyStarlike


def _first_singularity(nf: NormalizedFunction, kind: str) -> float:
    key = (nf.family, kind)
    first = _first_zero_cache.get(key)
    if first is None:
        first = positive_zeros(nf.family, kind, 1).first
        _first_zero_cache[key] = first
    # h-form tables live in sqrt(z), so poles sit at the squares
    return first * first if nf.form == "h" else first


def _membership_note(nf: NormalizedFunction) -> str:
    if not isinstance(nf.family, MittagLeffler) or nf.family.mu <= 1.0:
        return ""
    status = wi_membership(nf.family.mu, nf.family.nu)
    if status == "member":
        return ""
    warnings.warn(
        f"{nf.family.label()}: parameters are not confirmed inside the "
        f"invariant set ({status}); only the real kernel zeros found "
        "numerically back the radius equations",
        stacklevel=3,
    )
    return f"invariant-set membership: {status}"


def _solve_monotone(fn, lo: float, hi: float, resid_tol: float = _RESID_TOL):
    """Root of a monotone residual with a certified sign change on [lo, hi]."""
    flo, fhi = fn(lo), fn(hi)
    iters = 2
    if flo == 0.0:
        return lo, 0.0, iters, (lo, hi)
    if fhi == 0.0:
        return hi, 0.0, iters, (lo, hi)
    if (flo > 0.0) == (fhi > 0.0):
        raise BracketingError(
            f"no sign change on [{lo:g}, {hi:g}] "
            f"(endpoint values {flo:g}, {fhi:g}); the radius equation should "
            "be monotone with opposite-sign endpoints"
        )
    rising = fhi > 0.0
    while hi - lo > 1e-6 * hi:
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        iters += 1
        if (fm > 0.0) == rising:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    r = 0.5 * (lo + hi)
    fr = fn(r)
    iters += 1
    for _ in range(80):
        if abs(fr) <= resid_tol or hi - lo <= 4e-16 * hi:
            break
        h = 1e-7 * r
        d = (fn(r + h) - fn(r - h)) / (2.0 * h)
        iters += 2
        cand = r - fr / d if d != 0.0 else 0.5 * (lo + hi)
        if not lo < cand < hi:
            cand = 0.5 * (lo + hi)
        fc = fn(cand)
        iters += 1
        if (fc > 0.0) == rising:
            hi, fhi = cand, fc
        else:
            lo, flo = cand, fc
        r, fr = cand, fc
    if abs(fr) > _CERT_TOL * max(1.0, abs(flo), abs(fhi)):
        raise ConvergenceError(
            f"root residual {abs(fr):.3e} stayed above tolerance on "
            f"[{lo:g}, {hi:g}]"
        )
    return r, abs(fr), iters, (lo, hi)


def _disk_radius(nf: NormalizedFunction, domain: TargetDomain, functional,
                 kind: str, extra_note: str,
                 resid_tol: float = _RESID_TOL) -> RadiusResult:
    ares = alpha_of(domain)
    alpha = ares.alpha
    notes = [extra_note] if extra_note else []
    if ares.printed_alpha is not None:
        notes.append(
            f"effective alpha {alpha:.12g} used; literature prints "
            f"{ares.printed_alpha:.12g}"
        )
    note = _membership_note(nf)
    if note:
        notes.append(note)
    upper = 0.999 * _first_singularity(nf, kind)
    target = 1.0 - alpha

    def fn(r: float) -> float:
        return (functional(nf, r) - target).real

    radius, residual, iters, bracket = _solve_monotone(
        fn, 1e-9 * upper, upper, resid_tol
    )
    return RadiusResult(
        radius=radius,
        residual=residual,
        bracket=bracket,
        iterations=iters,
        alpha_used=alpha,
        notes="; ".join(notes),
    )


def starlike_radius(nf: NormalizedFunction, domain: TargetDomain,
                    resid_tol: float = _RESID_TOL) -> RadiusResult:
    """Largest r with S mapping |z| < r into the domain's inscribed disk.

    Solved as S(r) = 1 - alpha on (0, first kernel zero).  Families whose
    starlike statements live in cited prior work are labeled
    framework-derived in the notes; the disk reduction is identical.
    """
    extra = (
        "framework-derived"
        if isinstance(nf.family, (Lommel, Struve, Legendre))
        else ""
    )
    return _disk_radius(nf, domain, starlike_functional, "base", extra,
                        resid_tol)


def convex_radius(nf: NormalizedFunction, domain: TargetDomain,
                  resid_tol: float = _RESID_TOL) -> RadiusResult:
    """Largest r with C mapping |z| < r into the inscribed disk.

    Solved as C(r) = 1 - alpha on (0, first derivative-kernel zero).
    """
    return _disk_radius(
        nf, domain, convex_functional, _CONVEX_KIND[nf.form], "", resid_tol
    )


def _form_factor(nf: NormalizedFunction) -> float:
    if nf.form == "f":
        return 2.0 / nf.weight
    return 2.0 if nf.form == "g" else 1.0


def _sector_gap(nf: NormalizedFunction, s: float, r: float) -> float:
    """T(r): crosses zero where the boundary disk meets the sector edge."""
    w = -r if nf.form == "h" else -(r * r)
    b0n, b1n, _, *_ = scaled_kernel(nf.family, w)
    b0p, b1p, _, *_ = scaled_kernel(nf.family, -w)
    qn = w * b1n
    if abs(b0n) <= 1e-12 * max(1.0, abs(qn)):
        raise PoleProximityError(
            f"{nf.label()}: sector equation evaluated at a kernel zero (r = {r:g})"
        )
    a = -2.0 * qn / b0n
    b = -2.0 * w * b1p / b0p
    return _form_factor(nf) * 0.25 * ((a + b) + s * (a - b)) - s


def strongly_starlike_radius(
    nf: NormalizedFunction, epsilon: float, table: ZeroTable,
    resid_tol: float = _RESID_TOL,
) -> RadiusResult:
    """Largest r with |arg S| below epsilon * pi/2 throughout |z| < r.

    Needs a base-kind table of the family: its first zero bounds the
    bracket and its partial sum with tail enclosure cross-checks the root
    solved from the exact two-point form of T.  alpha_used records epsilon.
    """
    StronglyStarlike(epsilon)  # range check
    if table.kind != "base":
        raise ParameterError(
            f"sector radius needs a base-kind table, got {table.kind!r}"
        )
    if table.family != nf.family:
        raise ParameterError("zero table belongs to a different family")
    s = math.sin(0.5 * math.pi * epsilon)
    first = table.first
    upper = 0.999 * (first * first if nf.form == "h" else first)
    note = _membership_note(nf)

    radius, residual, iters, bracket = _solve_monotone(
        lambda r: _sector_gap(nf, s, r), 1e-9 * upper, upper, resid_tol
    )

    # independent enclosure of T(radius) from the table: the partial sum
    # undershoots by the (positive) discarded terms, bounded via the
    # first-moment tail
    c = _form_factor(nf)
    if nf.form == "h":
        x = radius
        partial = sum(
            m * (zt * zt * radius + s * radius * radius)
            / (zt**4 - radius * radius)
            for zt, m in zip(table.zeros, table.multiplicities)
        )
    else:
        x = radius * radius
        partial = sum(
            m * (zt * zt * x + s * x * x) / (zt**4 - x * x)
            for zt, m in zip(table.zeros, table.multiplicities)
        )
    _, tail_hi = tail_sum_bounds(table, x)
    t_partial = c * partial - s
    t_upper = t_partial + c * (1.0 + s) * tail_hi
    if t_partial > 1e-9 or t_upper < -1e-9:
        raise ConvergenceError(
            f"zero-sum cross-check rejects the sector radius: enclosure "
            f"[{t_partial:.3e}, {t_upper:.3e}] misses zero"
        )
    notes = [f"zero-sum cross-check enclosure [{t_partial:.2e}, {t_upper:.2e}]"]
    if note:
        notes.append(note)
    return RadiusResult(
        radius=radius,
        residual=residual,
        bracket=bracket,
        iterations=iters,
        alpha_used=epsilon,
        notes="; ".join(notes),
    )


def solve(query: RadiusQuery, table: ZeroTable | None = None,
          n_zeros: int = 100, resid_tol: float = _RESID_TOL) -> RadiusResult:
    """Dispatch a RadiusQuery; builds a base table for sector problems."""
    problem = query.problem
    if isinstance(problem, Starlike):
        return starlike_radius(query.nf, problem.domain, resid_tol)
    if isinstance(problem, Convex):
        return convex_radius(query.nf, problem.domain, resid_tol)
    if isinstance(problem, StronglyStarlike):
        if table is None:
            table = positive_zeros(query.nf.family, "base", n_zeros)
        return strongly_starlike_radius(
            query.nf, problem.epsilon, table, resid_tol
        )
    raise ParameterError(f"unknown radius problem {problem!r}")
