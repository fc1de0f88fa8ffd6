"""
Group Service
Braid group interface: inverse elimination, normal forms, equality, inversion
"""

import logging
from typing import Optional, Tuple

from ..core import e_codes
from ..errors import DomainError, InternalError
from ..models import (
    DELTA,
    DELTA_INV,
    NormalForm,
    Policy,
    RewriteTrace,
    SignedWord,
    Word,
    check_same_rank,
    is_artin,
)
from .rewrite_service import RewriteEngine, get_rewrite_engine

logger = logging.getLogger(__name__)


class BraidGroupService:
    """
    Normal forms Δ^k·A in B_{n+1}

    a_i^-1 is replaced by Δ^-1 E_i; the relations for D^-1 do the rest.
    """

    def __init__(self, engine: Optional[RewriteEngine] = None):
        self.engine = engine or get_rewrite_engine()

        logger.info("BraidGroupService initialized")

    def desugar_inverses(self, u: SignedWord) -> Word:
        """Replace every a_i^-1 by D^-1 E_i"""
        codes = []
        for code, sign in u.letters:
            if sign < 0 and is_artin(code):
                codes.append(DELTA_INV)
                codes.extend(e_codes(code - 1, u.rank))
            else:
                codes.append(code)
        return Word.trusted(tuple(codes), u.rank)

    def normal_form(self, u: SignedWord, policy: Optional[Policy] = None) -> NormalForm:
        return self.normal_form_with_steps(u, policy)[0]

    def normal_form_with_steps(
        self, u: SignedWord, policy: Optional[Policy] = None
    ) -> Tuple[NormalForm, int]:
        """Normal form and the number of rewrite steps it took"""
        word = self.desugar_inverses(u)
        codes, steps = self.engine.normalize_codes(word.letters, word.rank, policy)
        return self._split(codes, u.rank), steps

    def normal_form_with_trace(
        self, u: SignedWord, policy: Optional[Policy] = None
    ) -> Tuple[NormalForm, RewriteTrace]:
        """Normal form and every rewrite step, starting from the desugared word"""
        irreducible, trace = self.engine.normalize(self.desugar_inverses(u), policy)
        return self._split(irreducible.letters, u.rank), trace

    def _split(self, codes, rank: int) -> NormalForm:
        """Cut an irreducible word into its uniformly signed Delta prefix and tail"""
        prefix = 0
        while prefix < len(codes) and not is_artin(codes[prefix]):
            prefix += 1
        head, tail = codes[:prefix], codes[prefix:]
        if head and len(set(head)) != 1:
            raise InternalError(f"Irreducible word has a mixed Delta prefix: {head}")
        if not all(is_artin(code) for code in tail):
            raise InternalError("Irreducible word has a Delta letter after an Artin letter")
        k = len(head) if not head or head[0] == DELTA else -len(head)
        return NormalForm(delta_exp=k, tail=Word.trusted(tail, rank))

    def equal(self, u: SignedWord, v: SignedWord) -> bool:
        check_same_rank(u.rank, v.rank)
        return self.normal_form(u) == self.normal_form(v)

    def invert(self, u: SignedWord) -> NormalForm:
        return self.normal_form(u.inverse())

    def multiply(self, u: SignedWord, v: SignedWord) -> NormalForm:
        check_same_rank(u.rank, v.rank)
        return self.normal_form(u + v)

    def power(self, u: SignedWord, m: int) -> NormalForm:
        base = u if m >= 0 else u.inverse()
        return self.normal_form(SignedWord.model_construct(
            letters=base.letters * abs(m), rank=u.rank
        ))

    def is_positive(self, u: SignedWord) -> bool:
        """True iff the braid lies in the positive monoid"""
        return self.normal_form(u).delta_exp >= 0

    def positive_equal(self, u: Word, v: Word) -> bool:
        """Equality of positive words in the positive monoid"""
        if not u.is_positive() or not v.is_positive():
            raise DomainError("positive_equal needs Delta-free positive words")
        return self.equal(SignedWord.from_word(u), SignedWord.from_word(v))


# Global service instance
_group_service = None


def get_group_service() -> BraidGroupService:
    """Get global group service instance"""
    global _group_service
    if _group_service is None:
        _group_service = BraidGroupService()
    return _group_service
