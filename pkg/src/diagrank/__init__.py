"""Exact bijections between k-tuples of naturals and the naturals."""
from .bigbinom import binom, compositions_count, parallel_sum
from .monotone_order import (
    EQUAL,
    GREATER,
    LESS,
    fold,
    is_monotone,
    lex_cmp,
    minimum,
    successor,
    unfold,
)
from .rank_codec import TupleStream, enumerate_tuples, phi, psi, unrank_phi, unrank_psi

__all__ = [
    "binom", "compositions_count", "parallel_sum",
    "LESS", "EQUAL", "GREATER", "lex_cmp", "is_monotone", "minimum",
    "successor", "fold", "unfold",
    "phi", "psi", "unrank_phi", "unrank_psi", "TupleStream", "enumerate_tuples",
]
