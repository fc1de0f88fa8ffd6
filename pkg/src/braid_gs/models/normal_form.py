"""Normal form D^k A of a braid"""

from typing import Any, Dict

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import DomainError
from .word import DELTA, DELTA_INV, SignedWord, Word, ladder_codes


class NormalForm(BaseModel):
    """Braid Δ^k·A with A a positive S-irreducible word not starting with the ladder of Δ"""
    model_config = ConfigDict(frozen=True)

    delta_exp: int = Field(..., description="Exponent k of the Delta prefix")
    tail: Word = Field(..., description="Positive irreducible tail A")

    @model_validator(mode="after")
    def _check_tail(self) -> "NormalForm":
        if not self.tail.is_positive():
            raise DomainError(f"Normal form tail must be Delta-free: {self.tail}")
        ladder = ladder_codes(self.tail.rank)
        if self.tail.letters[: len(ladder)] == ladder:
            raise DomainError(f"Normal form tail starts with the Delta ladder: {self.tail}")
        return self

    @property
    def rank(self) -> int:
        return self.tail.rank

    def to_word(self) -> Word:
        """The irreducible word D^k A itself"""
        letter = DELTA if self.delta_exp >= 0 else DELTA_INV
        prefix = (letter,) * abs(self.delta_exp)
        return Word.trusted(prefix + self.tail.letters, self.rank)

    def to_signed_word(self) -> SignedWord:
        return SignedWord.from_word(self.to_word())

    def to_text(self) -> str:
        """Golden-file form `D^<k> | <letters>`"""
        return f"D^{self.delta_exp} | {self.tail}"

    def to_json(self) -> Dict[str, Any]:
        """JSON form {delta_exp, tail: [tokens]}"""
        return self.model_dump(mode="json")

    def __str__(self) -> str:
        return self.to_text()
