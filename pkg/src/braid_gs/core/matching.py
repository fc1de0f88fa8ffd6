"""
LHS recognition
Scans a word for every instance of the rule schemas
"""

from typing import Iterator, List, NamedTuple, Optional, Tuple

from ..models import (
    DELTA,
    DELTA_INV,
    Codes,
    RuleId,
    RuleMatch,
    RuleParams,
    Span,
    Word,
    artin,
)

A1 = artin(1)


class Hit(NamedTuple):
    """Raw match used inside the rewrite loop"""
    rule: RuleId
    start: int
    end: int
    params: RuleParams
    spans: Tuple[Span, ...] = ()


def _braid_hits(c: Codes, p: int) -> Iterator[Hit]:
    """R1 instances starting at p, ascending j

    c[p] = a_{i+1}, c[p+1] = a_i. V runs up to the first a_i after p+1, W from
    there up to the next a_{i+1}; any letter above a_i in between kills the match.
    """
    top = c[p]
    low = top - 1
    i = low - 1
    length = len(c)
    w_start = None
    w_min = None
    q = p + 2
    while q < length:
        code = c[q]
        if code == top:
            break
        if code < A1 or code > low:
            return
        if w_start is None:
            if code == low:
                w_start = q
                w_min = code
        elif code < w_min:
            w_min = code
        q += 1
    else:
        return

    # c[q] is the closing a_{i+1}; its descending run fixes the candidate j
    if w_start is None:
        w_start = q
        j_cap = i + 1
    else:
        j_cap = w_min - 1
    j_low = i + 1
    r = q + 1
    while j_low > 1 and r < length and c[r] == artin(j_low - 1):
        j_low -= 1
        r += 1

    v = c[p + 2:w_start]
    w = c[w_start:q]
    for j in range(j_low, min(j_cap, i + 1) + 1):
        end = q + 1 + (i + 1 - j)
        yield Hit(
            RuleId.R1,
            p,
            end,
            RuleParams(i=i, j=j, v=v, w=w),
            ((p + 2, w_start), (w_start, q)),
        )


def _ladder_hit(c: Codes, p: int, rank: int) -> Optional[Hit]:
    """R3 instance starting at p, if any; the parse is forced"""
    length = len(c)
    q = p + 1
    parts: List[Codes] = []
    spans: List[Span] = []
    for k in range(1, rank):
        start = q
        top = artin(k)
        while q < length and A1 <= c[q] <= top:
            q += 1
        parts.append(c[start:q])
        spans.append((start, q))
        for m in range(k + 1, 0, -1):
            if q >= length or c[q] != artin(m):
                return None
            q += 1
    return Hit(RuleId.R3, p, q, RuleParams(ladder=tuple(parts)), tuple(spans))


def hits_at(c: Codes, p: int, rank: int) -> Iterator[Hit]:
    """All instances starting at p, in rule priority order"""
    x = c[p]
    has_next = p + 1 < len(c)
    y = c[p + 1] if has_next else None
    if x == DELTA:
        if y == DELTA_INV:
            yield Hit(RuleId.R5A, p, p + 2, RuleParams())
        return
    if x == DELTA_INV:
        if y == DELTA:
            yield Hit(RuleId.R5B, p, p + 2, RuleParams())
        return

    l = x - 1  # noqa: E741
    if y == DELTA:
        yield Hit(RuleId.R4, p, p + 2, RuleParams(l=l))
    elif y == DELTA_INV:
        yield Hit(RuleId.R4P, p, p + 2, RuleParams(l=l))
    elif has_next:
        if x - y >= 2:
            yield Hit(RuleId.R2, p, p + 2, RuleParams(s=l, k=y - 1))
        elif x - y == 1 and y >= A1:
            yield from _braid_hits(c, p)
    if x == A1:
        hit = _ladder_hit(c, p, rank)
        if hit is not None:
            yield hit


def first_hit(c: Codes, rank: int) -> Optional[Hit]:
    """Leftmost instance, cheapest rule first"""
    for p in range(len(c)):
        for hit in hits_at(c, p, rank):
            return hit
    return None


def all_hits(c: Codes, rank: int) -> List[Hit]:
    hits: List[Hit] = []
    for p in range(len(c)):
        hits.extend(hits_at(c, p, rank))
    return hits


def to_match(hit: Hit) -> RuleMatch:
    """Public match record of a raw hit"""
    if hit.rule == RuleId.R1:
        return RuleMatch(
            rule=hit.rule,
            start=hit.start,
            end=hit.end,
            params=hit.params,
            v_span=hit.spans[0],
            w_span=hit.spans[1],
        )
    if hit.rule == RuleId.R3:
        return RuleMatch(
            rule=hit.rule,
            start=hit.start,
            end=hit.end,
            params=hit.params,
            ladder_spans=hit.spans,
        )
    return RuleMatch(rule=hit.rule, start=hit.start, end=hit.end, params=hit.params)


def find_matches(w: Word) -> List[RuleMatch]:
    """Every rule instance occurring in w

    Ordered by start position, then R5a, R5b, R4, R4p, R2, R1, R3, then ascending j.
    Empty iff w is S-irreducible.
    """
    return [to_match(hit) for hit in all_hits(w.letters, w.rank)]
