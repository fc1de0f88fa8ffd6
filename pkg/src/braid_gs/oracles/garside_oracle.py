"""
Garside oracle
Brute-force Δ^k·A form computed without the rewriting engine
"""

import logging
from typing import List, Optional, Tuple

from ..core import e_codes, flip_codes
from ..models import (
    DELTA,
    DELTA_INV,
    Codes,
    NormalForm,
    SignedWord,
    Word,
    ladder_codes,
)
from .positive_oracle import PositiveClassOracle, get_positive_oracle

logger = logging.getLogger(__name__)


class GarsideOracle:
    """
    Garside normal form by exhaustive search in the positive monoid

    Only meant for small ranks and short words: every ladder peel materializes
    a whole positive class.
    """

    def __init__(self, positive: Optional[PositiveClassOracle] = None):
        self.positive = positive or get_positive_oracle()

    def split_delta(self, u: SignedWord) -> Tuple[int, Codes]:
        """
        Rewrite u as Δ^e·P with P positive

        a_i^-1 becomes Δ^-1 E_i; every Δ^{±1} moved to the front flips the
        letters it passes.
        """
        n = u.rank
        exponent = 0
        positive: Codes = ()
        for code, sign in u.letters:
            if code == DELTA or code == DELTA_INV:
                positive = flip_codes(positive, n)
                exponent += 1 if code == DELTA else -1
            elif sign > 0:
                positive = positive + (code,)
            else:
                positive = flip_codes(positive, n)
                exponent -= 1
                positive = positive + e_codes(code - 1, n)
        return exponent, positive

    def peel_ladders(self, codes: Codes, rank: int, cap: Optional[int] = None) -> Tuple[int, Codes]:
        """Strip Δ off the left as often as the positive class allows"""
        ladder = ladder_codes(rank)
        size = len(ladder)
        peeled = 0
        while len(codes) >= size:
            members: List[Codes] = sorted(
                c for c in self.positive.class_codes(codes, cap) if c[:size] == ladder
            )
            if not members:
                break
            codes = members[0][size:]
            peeled += 1
        return peeled, codes

    def garside_oracle(self, u: SignedWord, cap: Optional[int] = None) -> NormalForm:
        """Normal form Δ^k·A with A the deg-lex least word of its positive class"""
        exponent, positive = self.split_delta(u)
        peeled, rest = self.peel_ladders(positive, u.rank, cap)
        tail = self.positive.min_rep_codes(rest, cap)
        logger.debug(
            f"Garside oracle: {len(u)} letters, Delta^{exponent + peeled}, tail {len(tail)}"
        )
        return NormalForm(delta_exp=exponent + peeled, tail=Word.trusted(tail, u.rank))


# Global oracle instance
_garside_oracle = None


def get_garside_oracle() -> GarsideOracle:
    """Get global Garside oracle instance"""
    global _garside_oracle
    if _garside_oracle is None:
        _garside_oracle = GarsideOracle()
    return _garside_oracle
