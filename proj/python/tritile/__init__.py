"""Exact triangle-tiling verification and nonexistence certificates."""
from ._tritile import (
    AlgebraError,
    TilingParseError,
    certify,
    classify,
    cyclotomic,
    generate,
    minpoly_cos,
    minpoly_sin,
    search_threetwo,
    totient,
    verify,
    witness,
)

__all__ = [
    "AlgebraError",
    "TilingParseError",
    "certify",
    "classify",
    "cyclotomic",
    "generate",
    "minpoly_cos",
    "minpoly_sin",
    "search_threetwo",
    "totient",
    "verify",
    "witness",
]
