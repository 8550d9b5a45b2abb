"""Exact counts of pattern-avoiding lattice walks (C++ core)."""

from ._core import (
    LatwalkError,
    asymptotic_ratio,
    check,
    count,
    first_step_count,
    multi_closed,
    multi_count,
    phi,
    phi_inverse,
    recognize,
    series,
    table,
    verify_bijection,
)

__all__ = [
    "LatwalkError",
    "asymptotic_ratio",
    "check",
    "count",
    "first_step_count",
    "multi_closed",
    "multi_count",
    "phi",
    "phi_inverse",
    "recognize",
    "series",
    "table",
    "verify_bijection",
]

__version__ = "0.1.0"
