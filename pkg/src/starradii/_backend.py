"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; RADII_KERNEL
overrides the choice ("c", "py", or "auto").  Only the scalar hot loop has a
compiled twin; the vectorized grid evaluator is numpy-bound either way and is
always served by the pure module.
"""

from __future__ import annotations

import os

from ._kernels_py import eval_b as _eval_b_py
from ._kernels_py import eval_b_many

_choice = os.environ.get("RADII_KERNEL", "auto").strip().lower()
if _choice not in ("auto", "c", "py"):
    raise ImportError(f"RADII_KERNEL must be auto, c or py, not {_choice!r}")

BACKEND = "py"
eval_b = _eval_b_py

if _choice in ("auto", "c"):
    try:
        from ._kernels_c import eval_b as _eval_b_c
    except ImportError:
        if _choice == "c":
            raise ImportError(
                "RADII_KERNEL=c but the compiled kernel extension is not available"
            )
    else:
        BACKEND = "c"
        eval_b = _eval_b_c

__all__ = ["BACKEND", "eval_b", "eval_b_many"]
