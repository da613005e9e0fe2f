"""Polynomial roots by descent with Estermann directions, plus exact certification helpers."""

from ._fta import (
    NonConvergenceError,
    check_norms,
    estermann_zeta,
    evaluate,
    find_roots,
    find_roots_exact,
    growth_radius,
    nth_root,
    taylor_shift,
    trace,
    verify_lemma,
)

__all__ = [
    "NonConvergenceError",
    "check_norms",
    "estermann_zeta",
    "evaluate",
    "find_roots",
    "find_roots_exact",
    "growth_radius",
    "nth_root",
    "taylor_shift",
    "trace",
    "verify_lemma",
]
