"""
Artin representation oracle
Equality of braids decided by their action on the free group F_{n+1}

The Artin action of B_{n+1} on F_{n+1} is faithful (classical), so two braid
words are equal iff they induce the same automorphism. Free-group words are
kept in Tietze form: x_m is m, x_m^-1 is -m.
"""

import logging
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import InternalError
from ..models import (
    DELTA,
    DELTA_INV,
    SignedWord,
    check_same_rank,
    ladder_codes,
)

logger = logging.getLogger(__name__)

Tietze = Tuple[int, ...]


def free_reduce(letters) -> Tietze:
    """Cancel adjacent x x^-1 pairs"""
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def free_inverse(letters: Tietze) -> Tietze:
    return tuple(-letter for letter in reversed(letters))


class FreeGroupElem(BaseModel):
    """Freely reduced word in x_1..x_{n+1}"""
    model_config = ConfigDict(frozen=True)

    letters: Tietze = ()

    @model_validator(mode="after")
    def _check_reduced(self) -> "FreeGroupElem":
        if free_reduce(self.letters) != self.letters:
            raise InternalError(f"Free group word is not reduced: {self.letters}")
        return self

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(
            f"x{abs(letter)}" + ("^-1" if letter < 0 else "") for letter in self.letters
        )


class FreeGroupAut(BaseModel):
    """Images of x_1..x_{n+1}; aut(u v) = aut(u) ∘ aut(v)"""
    model_config = ConfigDict(frozen=True)

    images: Tuple[FreeGroupElem, ...]

    @classmethod
    def from_images(cls, images: List[Tietze]) -> "FreeGroupAut":
        return cls(images=tuple(FreeGroupElem.model_construct(letters=img) for img in images))

    def image(self, m: int) -> FreeGroupElem:
        """Image of x_m, 1-based"""
        return self.images[m - 1]

    def __str__(self) -> str:
        return ", ".join(f"x{m} -> {img}" for m, img in enumerate(self.images, 1))


def desugar_delta(u: SignedWord) -> SignedWord:
    """Signed word over Artin letters only: D -> ladder, D^-1 -> inverse ladder"""
    ladder = ladder_codes(u.rank)
    letters = []
    for code, sign in u.letters:
        if code == DELTA:
            letters.extend((c, 1) for c in ladder)
        elif code == DELTA_INV:
            letters.extend((c, -1) for c in reversed(ladder))
        else:
            letters.append((code, sign))
    return SignedWord.model_construct(letters=tuple(letters), rank=u.rank)


def _act(images: List[Tietze], i: int, sign: int) -> None:
    """Right-compose the images with the action of a_i^sign (0-based slots i-1, i)"""
    left, right = images[i - 1], images[i]
    if sign > 0:
        # x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i - 1] = free_reduce(left + right + free_inverse(left))
        images[i] = left
    else:
        # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        images[i - 1] = right
        images[i] = free_reduce(free_inverse(right) + left + right)


class ArtinOracle:
    """
    Equality oracle from the Artin action

    Independent of the rewriting engine: it never sees the basis relations.
    """

    def automorphism_images(self, u: SignedWord) -> List[Tietze]:
        images: List[Tietze] = [(m,) for m in range(1, u.rank + 2)]
        for code, sign in desugar_delta(u).letters:
            _act(images, code - 1, sign)
        return images

    def artin_automorphism(self, u: SignedWord) -> FreeGroupAut:
        return FreeGroupAut.from_images(self.automorphism_images(u))

    def oracle_equal(self, u: SignedWord, v: SignedWord) -> bool:
        check_same_rank(u.rank, v.rank)
        return self.automorphism_images(u) == self.automorphism_images(v)

    def is_identity(self, u: SignedWord) -> bool:
        return all(img == (m,) for m, img in enumerate(self.automorphism_images(u), 1))


# Global oracle instance
_artin_oracle = None


def get_artin_oracle() -> ArtinOracle:
    """Get global Artin oracle instance"""
    global _artin_oracle
    if _artin_oracle is None:
        _artin_oracle = ArtinOracle()
    return _artin_oracle
