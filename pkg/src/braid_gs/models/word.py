"""Braid words over the Artin-Garside alphabet"""

from typing import Any, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_serializer, model_validator

from ..config import get_settings
from ..errors import IndexRangeError, RankMismatchError

# Generator codes. The integer order is the alphabet order D^-1 < D < a1 < ... < an.
DELTA_INV = 0
DELTA = 1

Codes = Tuple[int, ...]


def artin(i: int) -> int:
    """Code of the Artin generator a_i"""
    return i + 1


def artin_index(code: int) -> int:
    """Strand index i of an Artin code"""
    return code - 1


def is_artin(code: int) -> bool:
    return code > DELTA


def letter_token(code: int) -> str:
    """Text token of a single generator"""
    if code == DELTA_INV:
        return "D^-1"
    if code == DELTA:
        return "D"
    return f"a{code - 1}"


def ladder_codes(i: int) -> Codes:
    """Codes of Λ_1 Λ_2 ... Λ_i with Λ_k = a_k ... a_1"""
    return tuple(artin(m) for k in range(1, i + 1) for m in range(k, 0, -1))


def check_rank(rank: int) -> None:
    """Validate an ambient rank against the configured cap"""
    cap = get_settings().MAX_RANK
    if rank < 1 or rank > cap:
        raise IndexRangeError(f"Rank {rank} out of range [1, {cap}]")


def check_same_rank(left: int, right: int) -> None:
    if left != right:
        raise RankMismatchError(f"Words of rank {left} and {right} live in different groups")


class Word(BaseModel):
    """Word in the letters a_1..a_n, D, D^-1 of B_{n+1}

    Equality is letter-by-letter; group equality lives in the group service.
    """
    model_config = ConfigDict(frozen=True)

    letters: Codes = Field(default=(), description="Generator codes")
    rank: int = Field(..., description="Ambient rank n; the group is B_{n+1}")

    @model_validator(mode="after")
    def _check_letters(self) -> "Word":
        check_rank(self.rank)
        top = artin(self.rank)
        for position, code in enumerate(self.letters):
            if code < DELTA_INV or code > top:
                raise IndexRangeError(
                    f"Letter code {code} at position {position} out of range for rank {self.rank}"
                )
        return self

    @classmethod
    def of(cls, letters: Iterable[int], rank: int) -> "Word":
        """Validated word from generator codes"""
        return cls(letters=tuple(letters), rank=rank)

    @classmethod
    def trusted(cls, letters: Codes, rank: int) -> "Word":
        """Word from codes that are known to be valid for the rank"""
        return cls.model_construct(letters=letters, rank=rank)

    @classmethod
    def from_indices(cls, indices: Iterable[int], rank: int) -> "Word":
        """Positive word a_{i1} a_{i2} ... from Artin indices"""
        codes = []
        for position, i in enumerate(indices):
            if i < 1 or i > rank:
                raise IndexRangeError(
                    f"Index {i} at position {position} out of range [1, {rank}]"
                )
            codes.append(artin(i))
        return cls(letters=tuple(codes), rank=rank)

    @classmethod
    def empty(cls, rank: int) -> "Word":
        return cls(letters=(), rank=rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        check_same_rank(self.rank, other.rank)
        return Word.trusted(self.letters + other.letters, self.rank)

    def __str__(self) -> str:
        return " ".join(letter_token(code) for code in self.letters)

    def tokens(self) -> List[str]:
        return [letter_token(code) for code in self.letters]

    @model_serializer(when_used="json")
    def _dump_tokens(self) -> List[str]:
        return self.tokens()

    def is_positive(self) -> bool:
        """True if the word has no D or D^-1 letters"""
        return all(is_artin(code) for code in self.letters)

    def indices(self) -> List[int]:
        """Artin indices of a positive word"""
        return [artin_index(code) for code in self.letters if is_artin(code)]

    def deglex_key(self) -> Tuple[int, Codes]:
        """Sort key of the deg-lex order"""
        return len(self.letters), self.letters


SignedLetter = Tuple[int, int]


def _normalize_signed(letters: Iterable[Any]) -> Tuple[SignedLetter, ...]:
    normalized = []
    for code, sign in letters:
        if code == DELTA and sign == -1:
            code, sign = DELTA_INV, 1
        elif code == DELTA_INV and sign == -1:
            code, sign = DELTA, 1
        normalized.append((code, sign))
    return tuple(normalized)


class SignedWord(BaseModel):
    """Word that may also contain inverse Artin letters a_i^-1

    Inverted Delta letters are stored as the opposite Delta letter with sign +1.
    """
    model_config = ConfigDict(frozen=True)

    letters: Tuple[SignedLetter, ...] = Field(default=(), description="(code, sign) pairs")
    rank: int

    @model_validator(mode="before")
    @classmethod
    def _fold_delta_signs(cls, data: Any) -> Any:
        if isinstance(data, dict) and "letters" in data:
            data = dict(data)
            data["letters"] = _normalize_signed(data["letters"])
        return data

    @model_validator(mode="after")
    def _check_letters(self) -> "SignedWord":
        check_rank(self.rank)
        top = artin(self.rank)
        for position, (code, sign) in enumerate(self.letters):
            if code < DELTA_INV or code > top:
                raise IndexRangeError(
                    f"Letter code {code} at position {position} out of range for rank {self.rank}"
                )
            if sign not in (1, -1):
                raise IndexRangeError(f"Sign {sign} at position {position} is not +1 or -1")
        return self

    @classmethod
    def of(cls, letters: Iterable[SignedLetter], rank: int) -> "SignedWord":
        return cls(letters=tuple(letters), rank=rank)

    @classmethod
    def from_word(cls, word: Word) -> "SignedWord":
        return cls.model_construct(
            letters=tuple((code, 1) for code in word.letters), rank=word.rank
        )

    @classmethod
    def empty(cls, rank: int) -> "SignedWord":
        return cls(letters=(), rank=rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "SignedWord") -> "SignedWord":
        check_same_rank(self.rank, other.rank)
        return SignedWord.model_construct(letters=self.letters + other.letters, rank=self.rank)

    def __str__(self) -> str:
        return " ".join(self.tokens())

    def tokens(self) -> List[str]:
        return [
            letter_token(code) + ("^-1" if sign < 0 else "") for code, sign in self.letters
        ]

    @model_serializer(when_used="json")
    def _dump_tokens(self) -> List[str]:
        return self.tokens()

    def inverse(self) -> "SignedWord":
        """Formal inverse: reversed, every sign flipped"""
        return SignedWord(
            letters=tuple((code, -sign) for code, sign in reversed(self.letters)),
            rank=self.rank,
        )

    def is_positive(self) -> bool:
        """True if every letter is a positive Artin letter"""
        return all(is_artin(code) and sign > 0 for code, sign in self.letters)

    def to_word(self) -> Word:
        """Word form of a signed word without inverse Artin letters"""
        if any(sign < 0 for _, sign in self.letters):
            raise IndexRangeError("Signed word has inverse Artin letters; desugar it first")
        return Word.trusted(tuple(code for code, _ in self.letters), self.rank)
