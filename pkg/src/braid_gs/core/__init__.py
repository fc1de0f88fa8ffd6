"""Core word algebra and rule schemas"""

from .words import (
    LambdaVariant,
    Ordering,
    ascending_run,
    cmp_codes,
    cmp_deglex,
    delta_conjugate,
    delta_ladder,
    descending_run,
    e_codes,
    e_word,
    flip,
    flip_codes,
    lambda_codes,
    lambda_word,
    max_index,
    run_codes,
    shift,
    shift_codes,
)
from .rules import (
    instantiate,
    instantiate_lhs,
    instantiate_rhs,
    lhs_codes,
    rhs_codes,
    validate_params,
)
from .matching import Hit, all_hits, find_matches, first_hit, hits_at, to_match

__all__ = [
    # Words
    "LambdaVariant",
    "Ordering",
    "ascending_run",
    "cmp_codes",
    "cmp_deglex",
    "delta_conjugate",
    "delta_ladder",
    "descending_run",
    "e_codes",
    "e_word",
    "flip",
    "flip_codes",
    "lambda_codes",
    "lambda_word",
    "max_index",
    "run_codes",
    "shift",
    "shift_codes",
    # Rules
    "instantiate",
    "instantiate_lhs",
    "instantiate_rhs",
    "lhs_codes",
    "rhs_codes",
    "validate_params",
    # Matching
    "Hit",
    "all_hits",
    "find_matches",
    "first_hit",
    "hits_at",
    "to_match",
]
