"""
Text formats
Braid word grammar, normal form text and batch input files
"""

import re
from pathlib import Path
from typing import Iterator, List, Tuple

from ..config import get_settings
from ..errors import IndexRangeError, ParseError
from ..models import DELTA, DELTA_INV, NormalForm, SignedWord, Word, artin, check_rank

TOKEN_SPLIT = re.compile(r"[^\s.]+")
ARTIN_TOKEN = re.compile(r"a(\d+)(\^-1)?")
DELTA_TOKEN = re.compile(r"D(?:\^([+-]?\d+))?")
DELTA_PREFIX = re.compile(r"\s*D\^([+-]?\d+)\s*")


def parse_word(text: str, rank: int) -> SignedWord:
    """
    Parse a signed braid word

    Tokens are separated by whitespace or '.', each one of a<i>, a<i>^-1, D,
    D^-1 or D^<k>; D^<k> expands to |k| Delta letters of the sign of k.
    The expanded word may not exceed MAX_WORD_LENGTH letters.

    Args:
        text: Word text; empty text is the identity
        rank: Ambient rank n

    Returns:
        The signed word
    """
    check_rank(rank)
    max_length = get_settings().MAX_WORD_LENGTH
    letters: List[Tuple[int, int]] = []
    for token_index, match in enumerate(TOKEN_SPLIT.finditer(text)):
        token = match.group(0)
        artin_match = ARTIN_TOKEN.fullmatch(token)
        if artin_match:
            i = int(artin_match.group(1))
            if i < 1 or i > rank:
                raise IndexRangeError(
                    f"index out of range: a{i} (token {token_index}) for rank {rank}"
                )
            letters.append((artin(i), -1 if artin_match.group(2) else 1))
            continue
        delta_match = DELTA_TOKEN.fullmatch(token)
        if delta_match:
            k = int(delta_match.group(1)) if delta_match.group(1) is not None else 1
            letter = DELTA if k >= 0 else DELTA_INV
            if len(letters) + abs(k) > max_length:
                raise ParseError(
                    f"word longer than {max_length} letters at '{token}'",
                    match.start(),
                    token_index,
                )
            letters.extend([(letter, 1)] * abs(k))
            continue
        raise ParseError(f"unexpected token '{token}'", match.start(), token_index)
    return SignedWord.model_construct(letters=tuple(letters), rank=rank)


def parse_positive_word(text: str, rank: int) -> Word:
    """Parse a word of positive Artin letters only"""
    u = parse_word(text, rank)
    if not u.is_positive():
        raise ParseError(f"expected positive Artin letters only: '{text.strip()}'", 0)
    return u.to_word()


def parse_normal_form(text: str, rank: int) -> NormalForm:
    """Inverse of NormalForm.to_text: `D^<k> | <letters>`"""
    head, bar, tail = text.partition("|")
    prefix = DELTA_PREFIX.fullmatch(head)
    if not bar or prefix is None:
        raise ParseError(f"expected 'D^<k> | <letters>', got '{text.strip()}'", 0)
    return NormalForm(
        delta_exp=int(prefix.group(1)), tail=parse_positive_word(tail, rank)
    )


def read_items(path: str) -> Iterator[Tuple[int, str]]:
    """Non-blank, non-comment lines of a batch file with their 1-based line numbers"""
    with Path(path).open("r", encoding="utf-8") as handle:
        for number, line in enumerate(handle, 1):
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                yield number, stripped


def split_pair(line: str, number: int) -> Tuple[str, str]:
    """`u , v` line of an equality batch"""
    parts = line.split(",")
    if len(parts) != 2:
        raise ParseError(f"line {number}: expected two words separated by ','", 0)
    return parts[0], parts[1]
