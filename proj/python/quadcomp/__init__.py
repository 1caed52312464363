"""Exact decomposition of quadrinomials over the rationals.

Polynomials are passed and returned in the text form ``"x^4 + 2*x^3 - x"``;
rational numbers come back as :class:`fractions.Fraction`.
"""

from ._quadcomp import (
    DomainError,
    InvariantViolation,
    ParseError,
    classify,
    compose,
    decompose,
    dickson,
    dickson_match,
    evaluate,
    gv_determinant,
    mason_stothers,
    normalize,
    radical,
    search_solutions,
    theorem_a,
    theorem_b,
)

__all__ = [
    "DomainError",
    "InvariantViolation",
    "ParseError",
    "classify",
    "compose",
    "decompose",
    "dickson",
    "dickson_match",
    "evaluate",
    "gv_determinant",
    "mason_stothers",
    "normalize",
    "radical",
    "search_solutions",
    "theorem_a",
    "theorem_b",
]
