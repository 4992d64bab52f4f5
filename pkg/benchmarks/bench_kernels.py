"""Timing comparison of the two kernel backends.

Measures eval_b (scalar B, B', B'' at a point, the root-finder's hot call)
against the compiled twin on one representative argument per family, then
the shared numpy grid path at boundary-sampling size.  Run:

    python3 benchmarks/bench_kernels.py [--calls 2000] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

from starradii import _coeffs
from starradii._backend import BACKEND
from starradii._kernels_py import eval_b as eval_b_py
from starradii._kernels_py import eval_b_many
from starradii.families import (
    Legendre,
    Lommel,
    MittagLeffler,
    RamanujanQ,
    Struve,
    Wright,
)

try:
    from starradii._kernels_c import eval_b as eval_b_c
except ImportError:
    eval_b_c = None

WORKLOADS = [
    (Wright(1.0, 1.0), -1.44),
    (MittagLeffler(3.0, 1.0, 1.0), -200.0),
    (Lommel(0.3), -6.25),
    (Struve(0.3), -12.0),
    (RamanujanQ(1.0, 0.5, 1.0), -3.9),
    (Legendre(100), -0.8),
]


def best_of(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--calls", type=int, default=2000,
                    help="scalar calls per measurement (default 2000)")
    ap.add_argument("--repeat", type=int, default=5,
                    help="measurements per row, best kept (default 5)")
    args = ap.parse_args()

    print(f"active backend: {BACKEND}")
    if eval_b_c is None:
        print("compiled extension unavailable; timing pure python only")
    header = f"{'family':<34}{'py us/call':>12}{'c us/call':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))

    for family, w in WORKLOADS:
        logc = _coeffs.log_coeffs(family)
        complete = _coeffs.coeff_count(family) is not None

        def burn(fn):
            def loop():
                for _ in range(args.calls):
                    fn(logc, w, complete)
            return loop

        t_py = best_of(args.repeat, burn(eval_b_py)) / args.calls * 1e6
        row = f"{family.label():<34}{t_py:>12.2f}"
        if eval_b_c is not None:
            t_c = best_of(args.repeat, burn(eval_b_c)) / args.calls * 1e6
            row += f"{t_c:>12.2f}{t_py / t_c:>9.1f}"
        print(row)

    import numpy as np

    thetas = np.linspace(0.0, np.pi, 512)
    zs = 0.5 * np.exp(1j * thetas)
    for family in (Wright(1.0, 1.0), RamanujanQ(1.0, 0.5, 1.0)):
        logc = _coeffs.log_coeffs(family)
        complete = _coeffs.coeff_count(family) is not None
        t = best_of(args.repeat, lambda: eval_b_many(logc, -zs * zs, complete))
        print(f"grid 512 pts  {family.label():<32}{t * 1e6:>10.1f} us "
              "(numpy path, backend-independent)")


if __name__ == "__main__":
    main()
