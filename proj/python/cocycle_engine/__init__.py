"""Exact Chevalley-Eilenberg cohomology of the Witt and Virasoro algebras on finite windows.

Rationals come back from the extension as "p/q" strings; the wrappers here turn
them into fractions.Fraction where a single value is returned.
"""

from fractions import Fraction

from . import _core
from ._core import (
    CocycleError,
    InclusionViolation,
    InvalidGenerator,
    NotACocycle,
    ProfileViolation,
    RecursionGap,
    ResidualNonZero,
    ShapeMismatch,
    coboundary,
    cohomology_dim,
    jacobi_violations,
    materialize,
    recursion_table,
    stabilization_scan,
    verify_cocycle,
)

__all__ = [
    "CocycleError",
    "InclusionViolation",
    "InvalidGenerator",
    "NotACocycle",
    "ProfileViolation",
    "RecursionGap",
    "ResidualNonZero",
    "ShapeMismatch",
    "bracket",
    "coboundary",
    "cohomology_dim",
    "decompose",
    "godbillon_vey",
    "jacobi_violations",
    "materialize",
    "recursion_table",
    "stabilization_scan",
    "verify_cocycle",
    "verify_nontrivial",
]


def bracket(algebra, n, m):
    """[e_n, e_m] as {index or "t": Fraction}."""
    return {k: Fraction(v) for k, v in _core.bracket(algebra, n, m).items()}


def godbillon_vey(i, j, k):
    return Fraction(_core.godbillon_vey(i, j, k))


def verify_nontrivial(cocycle, n):
    out = _core.verify_nontrivial(cocycle, n)
    out["functional_value"] = Fraction(out["functional_value"])
    return out


def decompose(text, n=9, m=13):
    """Split a degree-0 trivial 3-cocycle as lambda Psi + delta phi."""
    out = _core.decompose(text, n, m)
    out["lambda"] = Fraction(out["lambda"])
    return out
