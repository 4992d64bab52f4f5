"""Sharp starlikeness, convexity and strong-starlikeness radii for six
families of normalized special functions."""

from __future__ import annotations

from ._backend import BACKEND
from .errors import (
    BracketingError,
    ComputationError,
    ConvergenceError,
    ParameterError,
    PoleProximityError,
    TableError,
    UnsupportedDomainError,
)
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
from .normalizations import (
    NormalizedFunction,
    ZeroSumResult,
    convex_functional,
    convex_many,
    starlike_functional,
    starlike_many,
    sum_over_zeros_functional,
)
from .radius_solver import (
    Convex,
    RadiusQuery,
    RadiusResult,
    Starlike,
    StronglyStarlike,
    convex_radius,
    solve,
    starlike_radius,
    strongly_starlike_radius,
)
from .series_eval import EvalResult, eval_base, eval_deriv
from .target_domains import (
    DOMAIN_NAMES,
    AlphaResult,
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
    TargetDomain,
    alpha_numeric,
    alpha_of,
    phi,
    phi_boundary,
    wi_membership,
)
from .verification import (
    CertificateReport,
    certify_radius,
    check_disk_containment,
    check_disk_lemma,
    check_lambda_inequality,
    check_sector,
    check_sharpness,
    check_zero_sum_agreement,
)
from .zero_tables import (
    InterlacingReport,
    ZeroTable,
    check_interlacing,
    hadamard_product_bounds,
    positive_zeros,
    tail_sum_bounds,
)

__version__ = "0.1.0"
