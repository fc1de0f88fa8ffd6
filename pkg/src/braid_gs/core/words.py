"""
Braid-core word families
Deg-lex order, Λ words, Delta ladders, E_i, runs, index shifts and flips
"""

from enum import Enum, IntEnum
from typing import Iterable

from ..errors import DomainError, IndexRangeError
from ..models import (
    Codes,
    Word,
    artin,
    artin_index,
    check_rank,
    check_same_rank,
    is_artin,
    ladder_codes,
)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class LambdaVariant(str, Enum):
    FULL = "full"              # a_i ... a_1
    MINUS = "minus"            # a_i ... a_2
    MINUSMINUS = "minusminus"  # a_i ... a_3


_LAMBDA_STOP = {LambdaVariant.FULL: 0, LambdaVariant.MINUS: 1, LambdaVariant.MINUSMINUS: 2}


def _check_index(i: int, low: int, high: int, what: str) -> None:
    if i < low or i > high:
        raise IndexRangeError(f"{what} index {i} out of range [{low}, {high}]")


def _require_positive(word: Word, operation: str) -> None:
    if not word.is_positive():
        raise DomainError(f"{operation} needs a positive word, got: {word}")


def cmp_codes(u: Codes, v: Codes) -> Ordering:
    """Deg-lex comparison of raw code tuples"""
    if len(u) != len(v):
        return Ordering.LESS if len(u) < len(v) else Ordering.GREATER
    if u == v:
        return Ordering.EQUAL
    return Ordering.LESS if u < v else Ordering.GREATER


def cmp_deglex(u: Word, v: Word) -> Ordering:
    """Compare by length first, then leftmost letter under D^-1 < D < a1 < ... < an"""
    check_same_rank(u.rank, v.rank)
    return cmp_codes(u.letters, v.letters)


def lambda_codes(i: int, variant: LambdaVariant = LambdaVariant.FULL) -> Codes:
    return tuple(artin(m) for m in range(i, _LAMBDA_STOP[variant], -1))


def lambda_word(i: int, variant: LambdaVariant, rank: int) -> Word:
    """Λ_i, Λ_i^(-) or Λ_i^(--)"""
    check_rank(rank)
    low = 2 if variant == LambdaVariant.MINUSMINUS else 1
    _check_index(i, low, rank, f"Lambda {variant.value}")
    return Word.trusted(lambda_codes(i, variant), rank)


def delta_ladder(i: int, rank: int) -> Word:
    """Δ_i = Λ_1 ... Λ_i; for i = n the positive word of Delta"""
    check_rank(rank)
    _check_index(i, 1, rank, "Delta ladder")
    return Word.trusted(ladder_codes(i), rank)


def e_codes(i: int, rank: int) -> Codes:
    """E_i = Λ_1 ... Λ_{n-i} Λ_{n-i+1}^(-) Λ_{n-i+2} ... Λ_n"""
    cut = rank - i + 1
    codes = []
    for k in range(1, rank + 1):
        variant = LambdaVariant.MINUS if k == cut else LambdaVariant.FULL
        codes.extend(lambda_codes(k, variant))
    return tuple(codes)


def e_word(i: int, rank: int) -> Word:
    """Positive word with E_i a_i = Δ, so a_i^-1 = Δ^-1 E_i"""
    check_rank(rank)
    _check_index(i, 1, rank, "E word")
    return Word.trusted(e_codes(i, rank), rank)


def shift_codes(codes: Iterable[int], k: int) -> Codes:
    return tuple(code + k for code in codes)


def shift(v: Word, k: int) -> Word:
    """V^(k): every a_m becomes a_{m+k}"""
    _require_positive(v, "shift")
    for position, code in enumerate(v.letters):
        target = artin_index(code) + k
        if target < 1 or target > v.rank:
            raise IndexRangeError(
                f"Shift by {k} moves a{artin_index(code)} at position {position} "
                f"out of [1, {v.rank}]"
            )
    return Word.trusted(shift_codes(v.letters, k), v.rank)


def flip_codes(codes: Iterable[int], i: int) -> Codes:
    # a_j -> a_{i-j+1} in code space: c -> i + 3 - c
    return tuple(i + 3 - code for code in codes)


def flip(v: Word, i: int) -> Word:
    """V^{Δ_i}: substitute a_j -> a_{i-j+1}; an involution"""
    _require_positive(v, "flip")
    _check_index(i, 1, v.rank, "Flip")
    for position, code in enumerate(v.letters):
        if artin_index(code) > i:
            raise DomainError(
                f"Flip by Delta_{i} undefined on a{artin_index(code)} at position {position}"
            )
    return Word.trusted(flip_codes(v.letters, i), v.rank)


def delta_conjugate(v: Word) -> Word:
    """Δ^-1 V Δ as a word: the flip over all n generators"""
    return flip(v, v.rank)


def run_codes(i: int, j: int) -> Codes:
    """a_i a_{i-1} ... a_j, empty for j = i + 1"""
    return tuple(artin(m) for m in range(i, j - 1, -1))


def descending_run(i: int, j: int, rank: int) -> Word:
    """a_{ij} = a_i a_{i-1} ... a_j; a_{ii} = a_i; a_{i,i+1} = 1"""
    check_rank(rank)
    _check_index(i, 0, rank, "Run top")
    if j < 1 or j > i + 1:
        raise IndexRangeError(f"Run bottom {j} out of range [1, {i + 1}]")
    return Word.trusted(run_codes(i, j), rank)


def ascending_run(j: int, i: int, rank: int) -> Word:
    """a_j a_{j+1} ... a_i, empty for j = i + 1"""
    check_rank(rank)
    _check_index(i, 0, rank, "Run top")
    if j < 1 or j > i + 1:
        raise IndexRangeError(f"Run bottom {j} out of range [1, {i + 1}]")
    return Word.trusted(tuple(artin(m) for m in range(j, i + 1)), rank)


def max_index(codes: Iterable[int]) -> int:
    """Largest Artin index among the codes, 0 if there is none"""
    return max((artin_index(code) for code in codes if is_artin(code)), default=0)
