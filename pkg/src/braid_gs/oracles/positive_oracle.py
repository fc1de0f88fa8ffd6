"""
Positive monoid oracle
Breadth-first closure of a positive word under the braid and commutation relations
"""

import logging
from collections import deque
from typing import FrozenSet, Iterator, Optional, Set

from ..config import get_settings
from ..errors import DomainError, ResourceLimitError
from ..models import Codes, Word, ladder_codes

logger = logging.getLogger(__name__)


def _neighbours(c: Codes) -> Iterator[Codes]:
    """Words one relation away, in either direction; lengths are preserved"""
    length = len(c)
    for p in range(length - 1):
        x, y = c[p], c[p + 1]
        gap = x - y
        if gap >= 2 or gap <= -2:
            yield c[:p] + (y, x) + c[p + 2:]
        elif (gap == 1 or gap == -1) and p + 2 < length and c[p + 2] == x:
            yield c[:p] + (y, x, y) + c[p + 3:]


class PositiveClassOracle:
    """
    Equivalence classes in the positive braid monoid

    Classes are materialized; the cap bounds their size.
    """

    def __init__(self, cap: Optional[int] = None):
        self.cap = cap or get_settings().BFS_CLASS_CAP

    def class_codes(self, codes: Codes, cap: Optional[int] = None) -> FrozenSet[Codes]:
        limit = cap or self.cap
        visited: Set[Codes] = {codes}
        queue = deque([codes])
        while queue:
            current = queue.popleft()
            for neighbour in _neighbours(current):
                if neighbour not in visited:
                    visited.add(neighbour)
                    if len(visited) > limit:
                        raise ResourceLimitError(
                            f"Positive class of a length-{len(codes)} word exceeds cap {limit}",
                            reached=len(visited),
                        )
                    queue.append(neighbour)
        return frozenset(visited)

    def positive_class(self, w: Word, cap: Optional[int] = None) -> FrozenSet[Word]:
        """All positive words equal to w in the positive monoid"""
        if not w.is_positive():
            raise DomainError(f"positive_class needs a Delta-free word, got: {w}")
        return frozenset(Word.trusted(c, w.rank) for c in self.class_codes(w.letters, cap))

    def min_rep_codes(self, codes: Codes, cap: Optional[int] = None) -> Codes:
        # every member has the same length, so deg-lex is plain tuple order
        return min(self.class_codes(codes, cap))

    def positive_min_rep(self, w: Word, cap: Optional[int] = None) -> Word:
        """Deg-lex minimal member of the positive class of w"""
        if not w.is_positive():
            raise DomainError(f"positive_min_rep needs a Delta-free word, got: {w}")
        return Word.trusted(self.min_rep_codes(w.letters, cap), w.rank)

    def left_divisible_by_delta(self, w: Word, cap: Optional[int] = None) -> bool:
        """True if some member of the class starts with the ladder of Delta"""
        ladder = ladder_codes(w.rank)
        if len(w) < len(ladder):
            return False
        return any(c[: len(ladder)] == ladder for c in self.class_codes(w.letters, cap))


# Global oracle instance
_positive_oracle = None


def get_positive_oracle() -> PositiveClassOracle:
    """Get global positive class oracle instance"""
    global _positive_oracle
    if _positive_oracle is None:
        _positive_oracle = PositiveClassOracle()
    return _positive_oracle
