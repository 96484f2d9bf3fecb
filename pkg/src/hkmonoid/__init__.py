"""Hecke-Kiselman monoids of oriented cycles and finite digraphs.

The package computes normal forms in the cycle monoid ``C_n``, decomposes
reduced words into matrix-type pieces ``a (x_n q_i)^k b``, builds the
sandwich matrices of those pieces, and decides Noetherianity of
Hecke-Kiselman algebras from the shape of the defining digraph.
"""

from hkmonoid.words import (
    Word,
    count_letter,
    deglex_compare,
    find_factor,
    format_word,
    parse_word,
    q_word,
    xq_word,
)
from hkmonoid.rewrite import (
    ReductionRule,
    find_redex,
    apply_rule,
    is_reduced,
    multiply,
    normalize,
    normalize_with_strategy,
    power_of_q,
    trace_normalize,
)

__version__ = "0.1.0"

__all__ = [
    "Word",
    "count_letter",
    "deglex_compare",
    "find_factor",
    "format_word",
    "parse_word",
    "q_word",
    "xq_word",
    "ReductionRule",
    "find_redex",
    "apply_rule",
    "is_reduced",
    "multiply",
    "normalize",
    "normalize_with_strategy",
    "power_of_q",
    "trace_normalize",
]
