"""Descriptors for the six special-function families.

Each family is a frozen dataclass carrying its parameters; construction
validates the admissible ranges.  All six share one structural fact that the
rest of the package leans on: the relevant entire kernel is B(w) = sum c_n w^n
with c_0 = 1 and every c_n > 0, evaluated at w = -t^2 (so the kernel is even
in t with only real zeros for in-range parameters).  The coefficient
machinery lives in _coeffs; this module only describes parameters and the
form weight kappa used by the f-type normalization (z^kappa kernel)^(1/kappa).
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .errors import ParameterError


class FunctionFamily:
    """Base class for family descriptors (frozen dataclasses)."""

    name: str = "?"

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def label(self) -> str:
        inner = ", ".join(f"{k}={v:g}" for k, v in self.params().items())
        return f"{self.name}({inner})"


@dataclass(frozen=True)
class Wright(FunctionFamily):
    """Generalized Bessel series sum x^n / (n! Gamma(n rho + beta))."""

    rho: float
    beta: float
    name = "wright"

    def __post_init__(self):
        if not (self.rho > 0 and self.beta > 0):
            raise ParameterError("wright requires rho > 0 and beta > 0")


@dataclass(frozen=True)
class MittagLeffler(FunctionFamily):
    """Three-parameter Mittag-Leffler series sum (a)_n x^n / (n! Gamma(mu n + nu))."""

    mu: float
    nu: float
    a: float
    name = "mittag-leffler"

    def __post_init__(self):
        if not (self.mu > 0 and self.nu > 0 and self.a > 0):
            raise ParameterError("mittag-leffler requires mu, nu, a > 0")


@dataclass(frozen=True)
class Lommel(FunctionFamily):
    """Lommel kernel 1F2(1; (u+2)/2, (u+3)/2; x), parameter 0 != u in (-1, 1)."""

    u: float
    name = "lommel"

    def __post_init__(self):
        if not (-1.0 < self.u < 1.0) or self.u == 0.0:
            raise ParameterError("lommel requires u in (-1, 1), u != 0")


@dataclass(frozen=True)
class Struve(FunctionFamily):
    """Struve kernel 1F2(1; 3/2, beta+3/2; x), parameter |beta| <= 1/2."""

    beta: float
    name = "struve"

    def __post_init__(self):
        if not abs(self.beta) <= 0.5:
            raise ParameterError("struve requires |beta| <= 1/2")


@dataclass(frozen=True)
class Legendre(FunctionFamily):
    """Odd-degree Legendre polynomial family; n >= 2 gives degree 2n - 1."""

    n: int
    name = "legendre"

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ParameterError("legendre requires a positive integer n")

    @property
    def degree(self) -> int:
        return 2 * self.n - 1


@dataclass(frozen=True)
class RamanujanQ(FunctionFamily):
    """q-series kernel sum (-a; q)_n q^(beta n^2) x^n / (q; q)_n.

    The stored parameter a >= 0 enters through the factors (1 + a q^j), which
    is the sign convention every normalized form and zero table consumes; all
    series coefficients are then positive.
    """

    beta: float
    q: float
    a: float
    name = "ramanujan-q"

    def __post_init__(self):
        if not (self.beta > 0 and 0.0 < self.q < 1.0 and self.a >= 0.0):
            raise ParameterError(
                "ramanujan-q requires beta > 0, q in (0, 1), a >= 0"
            )


def form_weight(family: FunctionFamily) -> float:
    """Exponent kappa of the weighted kernel z^kappa K(z) behind the f form.

    Also the weight used by the weighted_derivative zero tables.  Legendre's
    only normalized form is the odd polynomial itself (a g form), so its
    weight is 1.
    """
    if isinstance(family, Wright):
        return family.beta
    if isinstance(family, MittagLeffler):
        return family.nu
    if isinstance(family, Lommel):
        return family.u + 0.5
    if isinstance(family, Struve):
        return family.beta + 1.0
    if isinstance(family, RamanujanQ):
        return family.beta
    if isinstance(family, Legendre):
        return 1.0
    raise ParameterError(f"unknown family {family!r}")


FAMILY_NAMES = {
    "wright": Wright,
    "mittag-leffler": MittagLeffler,
    "lommel": Lommel,
    "struve": Struve,
    "legendre": Legendre,
    "ramanujan-q": RamanujanQ,
}
