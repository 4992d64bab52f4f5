"""Catalog of target domains for starlikeness, each a region phi(D) with
phi(0) = 1, together with the radius alpha of the largest disk
{w : |w - 1| < alpha} inscribed in it.

Closed-form alpha values are the primary source; alpha_numeric recomputes
them by minimizing |phi(e^(i theta)) - 1| over the boundary as an
independent oracle.  The module also houses the invariant parameter set
membership test for the Mittag-Leffler family (wi_membership): parameters
inside that set have kernels with only real zeros, which the zero tables
and radius formulas rely on.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .errors import ParameterError, UnsupportedDomainError

__all__ = [
    "TargetDomain",
    "Janowski",
    "RLCrescent",
    "Lemniscate",
    "Exponential",
    "Lune",
    "CardioidExp",
    "Sigmoid",
    "Sine",
    "Conic",
    "Disk",
    "AlphaResult",
    "DOMAIN_NAMES",
    "alpha_of",
    "alpha_numeric",
    "phi",
    "phi_boundary",
    "wi_membership",
]

_SQRT2 = math.sqrt(2.0)


class TargetDomain:
    """Base for the domain variants; subclasses are frozen dataclasses."""

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Janowski(TargetDomain):
    """phi(z) = (1 + Dz)/(1 + Ez) with -1 <= E < D <= 1."""

    D: float
    E: float

    def __post_init__(self) -> None:
        if not (-1.0 <= self.E < self.D <= 1.0):
            raise ParameterError(
                f"Janowski parameters need -1 <= E < D <= 1, got D={self.D}, E={self.E}"
            )

    def label(self) -> str:
        return f"janowski(D={self.D:g}, E={self.E:g})"


@dataclass(frozen=True)
class RLCrescent(TargetDomain):
    """phi(z) = sqrt(2) - (sqrt(2)-1) sqrt((1-z)/(1+2(sqrt(2)-1)z))."""

    def label(self) -> str:
        return "rl-crescent"


@dataclass(frozen=True)
class Lemniscate(TargetDomain):
    """phi(z) = sqrt(1+z); the image is the right lemniscate half."""

    def label(self) -> str:
        return "lemniscate"


@dataclass(frozen=True)
class Exponential(TargetDomain):
    """phi(z) = e^z."""

    def label(self) -> str:
        return "exponential"


@dataclass(frozen=True)
class Lune(TargetDomain):
    """phi(z) = z + sqrt(1+z^2)."""

    def label(self) -> str:
        return "lune"


@dataclass(frozen=True)
class CardioidExp(TargetDomain):
    """phi(z) = 1 + z e^z, a cardioid-shaped image."""

    def label(self) -> str:
        return "cardioid-exp"


@dataclass(frozen=True)
class Sigmoid(TargetDomain):
    """phi(z) = 2/(1 + e^-z)."""

    def label(self) -> str:
        return "sigmoid"


@dataclass(frozen=True)
class Sine(TargetDomain):
    """phi(z) = 1 + sin z."""

    def label(self) -> str:
        return "sine"


@dataclass(frozen=True)
class Conic(TargetDomain):
    """Conic sections: alpha = 1/(kappa+1); boundary maps only for kappa 0, 1.

    kappa = 0 is the half plane Re w > 0 via (1+z)/(1-z); kappa = 1 the
    parabolic region via 1 + (2/pi^2) log^2((1+sqrt z)/(1-sqrt z)).  The
    elliptic-integral maps for other kappa are out of scope, so only the
    alpha value is available there.
    """

    kappa: float

    def __post_init__(self) -> None:
        if not self.kappa >= 0:
            raise ParameterError(f"Conic needs kappa >= 0, got {self.kappa}")

    def label(self) -> str:
        return f"conic(kappa={self.kappa:g})"


@dataclass(frozen=True)
class Disk(TargetDomain):
    """phi(z) = 1 + alpha z: the target disk itself."""

    alpha: float

    def __post_init__(self) -> None:
        if not 0.0 < self.alpha <= 1.0:
            raise ParameterError(f"Disk needs alpha in (0, 1], got {self.alpha}")

    def label(self) -> str:
        return f"disk(alpha={self.alpha:g})"


DOMAIN_NAMES = {
    "janowski": Janowski,
    "rl-crescent": RLCrescent,
    "lemniscate": Lemniscate,
    "exponential": Exponential,
    "lune": Lune,
    "cardioid-exp": CardioidExp,
    "sigmoid": Sigmoid,
    "sine": Sine,
    "conic": Conic,
    "disk": Disk,
}


@dataclass(frozen=True)
class AlphaResult:
    """Inscribed-disk radius with its provenance.

    source is "closed_form" or "numeric_oracle"; boundary_argmin is the
    boundary angle achieving the minimum when numeric.  printed_alpha
    carries the literature value when it differs from the usable one
    (Exponential prints e - 1, which is > 1 and cannot be a disk radius
    with phi(-1) = 1/e; the effective value is 1 - 1/e).
    """

    alpha: float
    source: str
    boundary_argmin: float | None = None
    printed_alpha: float | None = None


def alpha_of(domain: TargetDomain) -> AlphaResult:
    """Closed-form inscribed-disk radius alpha for a catalog domain."""
    if isinstance(domain, Janowski):
        a = (domain.D - domain.E) / (1.0 + abs(domain.E))
    elif isinstance(domain, RLCrescent):
        a = math.sqrt(2.0 - 2.0 * _SQRT2 + math.sqrt(2.0 * _SQRT2 - 2.0))
    elif isinstance(domain, Lemniscate):
        a = _SQRT2 - 1.0
    elif isinstance(domain, Exponential):
        warnings.warn(
            "Exponential domain: the literature prints alpha = e - 1, which "
            "exceeds 1 and is inconsistent with phi(-1) = 1 - alpha; using "
            "the effective value 1 - 1/e (printed value kept in the result)",
            stacklevel=2,
        )
        return AlphaResult(
            1.0 - 1.0 / math.e, "closed_form", printed_alpha=math.e - 1.0
        )
    elif isinstance(domain, Lune):
        a = 2.0 - _SQRT2
    elif isinstance(domain, CardioidExp):
        a = 1.0 / math.e
    elif isinstance(domain, Sigmoid):
        a = (math.e - 1.0) / (math.e + 1.0)
    elif isinstance(domain, Sine):
        a = math.sin(1.0)
    elif isinstance(domain, Conic):
        a = 1.0 / (domain.kappa + 1.0)
    elif isinstance(domain, Disk):
        a = domain.alpha
    else:
        raise ParameterError(f"unknown target domain {domain!r}")
    return AlphaResult(a, "closed_form")


def phi(domain: TargetDomain, z: complex) -> complex:
    """The domain map phi at a point of the closed unit disk.

    Principal branches throughout; every variant satisfies phi(0) = 1.
    Conic kappa outside {0, 1} has no elementary map and raises.
    """
    z = complex(z)
    if isinstance(domain, Janowski):
        return (1.0 + domain.D * z) / (1.0 + domain.E * z)
    if isinstance(domain, RLCrescent):
        c = _SQRT2 - 1.0
        return _SQRT2 - c * cmath.sqrt((1.0 - z) / (1.0 + 2.0 * c * z))
    if isinstance(domain, Lemniscate):
        return cmath.sqrt(1.0 + z)
    if isinstance(domain, Exponential):
        return cmath.exp(z)
    if isinstance(domain, Lune):
        return z + cmath.sqrt(1.0 + z * z)
    if isinstance(domain, CardioidExp):
        return 1.0 + z * cmath.exp(z)
    if isinstance(domain, Sigmoid):
        return 2.0 / (1.0 + cmath.exp(-z))
    if isinstance(domain, Sine):
        return 1.0 + cmath.sin(z)
    if isinstance(domain, Conic):
        if domain.kappa == 0.0:
            return (1.0 + z) / (1.0 - z)
        if domain.kappa == 1.0:
            s = cmath.sqrt(z)
            ln = cmath.log((1.0 + s) / (1.0 - s))
            return 1.0 + (2.0 / math.pi**2) * ln * ln
        raise UnsupportedDomainError(
            f"{domain.label()}: boundary map needs elliptic integrals; only "
            "kappa 0 and 1 are evaluable"
        )
    if isinstance(domain, Disk):
        return 1.0 + domain.alpha * z
    raise ParameterError(f"unknown target domain {domain!r}")


def phi_boundary(domain: TargetDomain, theta: float) -> complex:
    """phi evaluated on the unit circle at angle theta."""
    return phi(domain, cmath.exp(1j * theta))


def _golden_min(fn, lo: float, hi: float, iters: int = 80) -> tuple[float, float]:
    # golden-section: probes stay strictly interior, so open endpoints are safe
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
    return (c, fc) if fc < fd else (d, fd)


def alpha_numeric(domain: TargetDomain, grid: int = 4096) -> AlphaResult:
    """alpha recomputed as min over the boundary of |phi - 1|.

    Samples |phi(e^(i theta)) - 1| on a midpoint grid over (0, pi) plus the
    endpoint pi (the maps have real coefficients, so the lower half circle
    is a mirror; midpoints dodge the theta = 0 singularities of Janowski
    E = -1 and the conic maps), then golden-section refines around the best
    sample.  Endpoint minima are reached in the limit from inside.
    """
    if grid < 8:
        raise ParameterError("alpha_numeric needs a grid of at least 8 points")
    if isinstance(domain, Conic) and domain.kappa not in (0.0, 1.0):
        raise UnsupportedDomainError(
            f"{domain.label()}: no evaluable boundary map for the numeric oracle"
        )

    def objective(theta: float) -> float:
        return abs(phi_boundary(domain, theta) - 1.0)

    step = math.pi / grid
    thetas = [(j + 0.5) * step for j in range(grid)] + [math.pi]
    vals = [objective(t) for t in thetas]
    best = min(range(len(thetas)), key=vals.__getitem__)
    lo = 0.0 if best == 0 else thetas[best - 1]
    hi = math.pi if best >= len(thetas) - 2 else thetas[best + 1]
    argmin, fmin = _golden_min(objective, lo, hi)
    if vals[best] < fmin:
        argmin, fmin = thetas[best], vals[best]
    return AlphaResult(fmin, "numeric_oracle", boundary_argmin=argmin)


# -- Mittag-Leffler parameter set -------------------------------------------
#
# Points are (x, nu) with x = 1/mu.  The core region, its two images, and
# the closure moves:
#
#   core:  x in (1/2, 1),  nu in [1/x - 1, 1] u [1/x, 2]
#   A(x, nu) = (x/2, nu)          B(x, nu) = (x/2, 1/x + nu)
#   C(x, nu) = (x, nu - 1) when nu > 1, identity otherwise
#
# The invariant set is the smallest superset of A(core) u B(core) closed
# under A, B, C.  Membership is decided by bounded backward search: a point
# is in the set iff some chain of inverse moves lands in A(core) u B(core).

_NODE_CAP = 20000


# Absorbs the ~1 ulp reciprocal error in mu0 = 1/(2x) at the closed nu-band
# endpoints; the open x-bounds stay strict.
_EDGE = 1e-12


def _in_base_region(x: float, nu: float) -> bool:
    # A(core) u B(core): x in (1/4, 1/2) open, mu0 = 1/(2x) the core mu
    if not 0.25 < x < 0.5:
        return False
    mu0 = 1.0 / (2.0 * x)
    if mu0 - 1.0 - _EDGE <= nu <= 1.0 + _EDGE or mu0 - _EDGE <= nu <= 2.0 + _EDGE:
        return True
    nu_b = nu - mu0
    return (
        mu0 - 1.0 - _EDGE <= nu_b <= 1.0 + _EDGE
        or mu0 - _EDGE <= nu_b <= 2.0 + _EDGE
    )


def wi_membership(mu: float, nu: float, depth: int = 32) -> str:
    """Bounded membership test for the invariant parameter set.

    Returns "member" when a chain of at most `depth` inverse closure moves
    connects (1/mu, nu) to the base region, "nonmember_at_depth" when the
    bounded search exhausts without a hit, and "unknown" when the frontier
    outgrows the node cap.  The closure is infinite, so no global
    non-membership is ever claimed.
    """
    if not mu > 1:
        raise ParameterError(f"membership test needs mu > 1, got {mu}")
    if not nu > 0:
        raise ParameterError(f"membership test needs nu > 0, got {nu}")
    if depth < 1:
        raise ParameterError("depth must be at least 1")
    start = (1.0 / mu, float(nu))
    frontier = [start]
    seen = {(round(start[0], 12), round(start[1], 12))}
    visited = 1
    for _ in range(depth):
        nxt = []
        for x, v in frontier:
            if _in_base_region(x, v):
                return "member"
            # base-region x never reaches 1/2, and inverse moves only grow x
            if x >= 0.5:
                continue
            pre = [(2.0 * x, v), (x, v + 1.0)]
            v_b = v - 1.0 / (2.0 * x)
            if v_b > 0.0:
                pre.append((2.0 * x, v_b))
            for p in pre:
                key = (round(p[0], 12), round(p[1], 12))
                if key not in seen:
                    seen.add(key)
                    nxt.append(p)
                    visited += 1
                    if visited > _NODE_CAP:
                        return "unknown"
        if not nxt:
            return "nonmember_at_depth"
        frontier = nxt
    if any(_in_base_region(x, v) for x, v in frontier):
        return "member"
    return "nonmember_at_depth"
