"""Shared fixtures: a session-scoped zero-table cache.

Long tables (N=200) serve several test modules and the acceptance suite;
building each (family, kind, N) once per session keeps the slow parts paid
exactly once.
"""

from __future__ import annotations

import pytest

from starradii.zero_tables import positive_zeros

_cache: dict = {}


def cached_table(family, kind, n, ceiling=None):
    key = (family, kind, n, ceiling)
    if key not in _cache:
        _cache[key] = positive_zeros(family, kind, n, ceiling)
    return _cache[key]


@pytest.fixture(scope="session")
def tables():
    """Memoized positive_zeros(family, kind, N[, ceiling])."""
    return cached_table
