"""Exact low-degree LMO invariants of splices of framed knots.

Submodules: ``dedekind`` (Dedekind sums and symbols), ``sl2z`` (factorization
of unimodular matrices), ``tridiag`` (unit tridiagonal matrices),
``diagrams`` (truncated Jacobi diagram algebra), ``splice`` (the splicing
formulas) and ``cli``.
"""
from .dedekind import ValidationError, dedekind_sum, dedekind_symbol, sgn
from .sl2z import Mat2, decompose, recompose, splice_factorization
from .splice import (
    UNKNOT,
    ConsistencyError,
    FramingFraction,
    KnotRecord,
    NotQHS,
    SpliceResult,
    casson_walker,
    is_qhs,
    kappa,
    lambda2_splice,
    lens,
    rational_surgery,
    splice_lmo_general,
    splice_lmo_truncated,
)
from .tridiag import Tridiagonal, inverse_corners, kirby_melvin, signature_recursive

__version__ = "0.1.0"

__all__ = [
    "UNKNOT", "ConsistencyError", "FramingFraction", "KnotRecord", "Mat2", "NotQHS", "SpliceResult",
    "Tridiagonal", "ValidationError", "casson_walker", "decompose", "dedekind_sum", "dedekind_symbol",
    "inverse_corners", "is_qhs", "kappa", "kirby_melvin", "lambda2_splice", "lens", "rational_surgery",
    "recompose", "sgn", "signature_recursive", "splice_factorization", "splice_lmo_general",
    "splice_lmo_truncated",
]
