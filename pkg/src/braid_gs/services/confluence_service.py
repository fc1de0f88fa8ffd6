"""
Confluence Service
Bounded enumeration of rule instances, their ambiguities and composition checks
"""

import logging
import time
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from ..config import get_settings
from ..core import Ordering, cmp_codes, lhs_codes, rhs_codes
from ..errors import ResourceLimitError
from ..models import (
    Ambiguity,
    AmbiguityKind,
    Codes,
    CompositionRecord,
    CompositionReport,
    RuleId,
    RuleInstance,
    RuleMatch,
    RuleParams,
    Word,
    artin,
    check_rank,
)
from .batch_service import map_in_pool
from .rewrite_service import get_rewrite_engine

logger = logging.getLogger(__name__)

# (rank, ambiguity word, left reduct, right reduct)
CompositionTask = Tuple[int, Codes, Codes, Codes]


def _words(low: int, high: int, max_len: int) -> Iterator[Codes]:
    """All words over a_low..a_high of length 0..max_len, shortest first"""
    alphabet = [artin(m) for m in range(low, high + 1)]
    yield ()
    if not alphabet:
        return
    for length in range(1, max_len + 1):
        yield from product(alphabet, repeat=length)


def _split_budget(count: int, budget: int) -> Iterator[Tuple[int, ...]]:
    """Every tuple of `count` lengths with sum <= budget"""
    if count == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in _split_budget(count - 1, budget - first):
            yield (first,) + rest


def _join_reducts(task: CompositionTask) -> Tuple[Codes, Codes]:
    """Normal forms of both one-step reducts; runs inside pool workers"""
    rank, _, left, right = task
    engine = get_rewrite_engine()
    nf_left, _ = engine.normalize_codes(left, rank)
    nf_right, _ = engine.normalize_codes(right, rank)
    return nf_left, nf_right


class ConfluenceService:
    """
    Desk-scale check that every composition of the basis is trivial

    Joinability is decided by normalizing both one-step reducts of each
    ambiguity; equal results certify the composition.
    """

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget or get_settings().ENUMERATION_BUDGET

        logger.info(f"ConfluenceService initialized (enumeration budget {self.budget})")

    def _r1_instances(self, n: int, max_lhs_len: int) -> Iterator[RuleInstance]:
        for i in range(1, n):
            for j in range(1, i + 2):
                free = max_lhs_len - 2 - (i + 2 - j)
                if free < 0:
                    continue
                for v in _words(1, i - 1, free):
                    yield RuleInstance(
                        rule=RuleId.R1, params=RuleParams(i=i, j=j, v=v, w=()), rank=n
                    )
                    room = free - len(v) - 1
                    if j > i or room < 0:
                        continue
                    # W is non-empty here and opens with a_i
                    for w_tail in _words(j, i, room):
                        yield RuleInstance(
                            rule=RuleId.R1,
                            params=RuleParams(i=i, j=j, v=v, w=(artin(i),) + w_tail),
                            rank=n,
                        )

    def _r3_instances(self, n: int, max_lhs_len: int) -> Iterator[RuleInstance]:
        free = max_lhs_len - n * (n + 1) // 2
        if free < 0:
            return
        for lengths in _split_budget(n - 1, free):
            choices = [
                product([artin(m) for m in range(1, k + 2)], repeat=length)
                for k, length in enumerate(lengths)
            ]
            for ladder in product(*choices):
                yield RuleInstance(
                    rule=RuleId.R3, params=RuleParams(ladder=tuple(ladder)), rank=n
                )

    def _all_instances(self, n: int, max_lhs_len: int) -> Iterator[RuleInstance]:
        if max_lhs_len >= 2:
            yield RuleInstance(rule=RuleId.R5A, params=RuleParams(), rank=n)
            yield RuleInstance(rule=RuleId.R5B, params=RuleParams(), rank=n)
            for rule in (RuleId.R4, RuleId.R4P):
                for l in range(1, n + 1):  # noqa: E741
                    yield RuleInstance(rule=rule, params=RuleParams(l=l), rank=n)
            for s in range(3, n + 1):
                for k in range(1, s - 1):
                    yield RuleInstance(rule=RuleId.R2, params=RuleParams(s=s, k=k), rank=n)
        yield from self._r1_instances(n, max_lhs_len)
        yield from self._r3_instances(n, max_lhs_len)

    def enumerate_instances(self, rank: int, max_lhs_len: int) -> List[RuleInstance]:
        """
        Every rule instance of rank n with an LHS of at most L letters

        Args:
            rank: Ambient rank n
            max_lhs_len: LHS length bound L

        Returns:
            Instances in a fixed order: R5a, R5b, R4, R4p, R2, R1, R3
        """
        check_rank(rank)
        instances: List[RuleInstance] = []
        for instance in self._all_instances(rank, max_lhs_len):
            instances.append(instance)
            if len(instances) > self.budget:
                raise ResourceLimitError(
                    f"Enumeration of rank {rank}, L={max_lhs_len} exceeds budget {self.budget}",
                    reached=len(instances),
                )
        logger.debug(f"Enumerated {len(instances)} instances (rank {rank}, L={max_lhs_len})")
        return instances

    def find_ambiguities(self, instances: List[RuleInstance], rank: int) -> List[Ambiguity]:
        """Overlap and inclusion ambiguities between all ordered pairs of instances"""
        sides = [
            (instance, lhs_codes(instance.rule, instance.params, rank)) for instance in instances
        ]
        ambiguities: List[Ambiguity] = []
        for a, (f, f_lhs) in enumerate(sides):
            for b, (g, g_lhs) in enumerate(sides):
                shorter = min(len(f_lhs), len(g_lhs))
                for ov in range(1, shorter):
                    if f_lhs[-ov:] == g_lhs[:ov]:
                        w = f_lhs + g_lhs[ov:]
                        ambiguities.append(
                            self._ambiguity(w, f, 0, g, len(f_lhs) - ov, AmbiguityKind.OVERLAP)
                        )
                if a == b or len(g_lhs) > len(f_lhs):
                    continue
                for p in range(len(f_lhs) - len(g_lhs) + 1):
                    if f_lhs[p:p + len(g_lhs)] == g_lhs:
                        ambiguities.append(
                            self._ambiguity(f_lhs, f, 0, g, p, AmbiguityKind.INCLUSION)
                        )
        return ambiguities

    def _ambiguity(
        self,
        w: Codes,
        left: RuleInstance,
        left_at: int,
        right: RuleInstance,
        right_at: int,
        kind: AmbiguityKind,
    ) -> Ambiguity:
        rank = left.rank
        left_len = len(lhs_codes(left.rule, left.params, rank))
        right_len = len(lhs_codes(right.rule, right.params, rank))
        return Ambiguity(
            w=Word.trusted(w, rank),
            left=RuleMatch(
                rule=left.rule, start=left_at, end=left_at + left_len, params=left.params
            ),
            right=RuleMatch(
                rule=right.rule, start=right_at, end=right_at + right_len, params=right.params
            ),
            kind=kind,
        )

    def reduct(self, ambiguity: Ambiguity, match: RuleMatch) -> Codes:
        """One-step reduct of the ambiguity word by one of its two matches"""
        w = ambiguity.w
        rhs = rhs_codes(match.rule, match.params, w.rank)
        return w.letters[:match.start] + rhs + w.letters[match.end:]

    def check_compositions(
        self,
        rank: int,
        max_lhs_len: int,
        workers: Optional[int] = None,
    ) -> CompositionReport:
        """
        Check every ambiguity of instances with LHS length <= L for joinability

        Args:
            rank: Ambient rank n (>= 2)
            max_lhs_len: LHS length bound L
            workers: Process pool size; 1 runs inline

        Returns:
            Report with one record per ambiguity, ordered by ambiguity word
        """
        started = time.perf_counter()
        instances = self.enumerate_instances(rank, max_lhs_len)
        ambiguities = self.find_ambiguities(instances, rank)
        ambiguities.sort(
            key=lambda amb: (
                amb.w.deglex_key(),
                amb.kind.value,
                amb.left.start,
                amb.right.start,
                str(amb.left),
                str(amb.right),
            )
        )
        logger.info(
            f"Checking {len(ambiguities)} ambiguities of {len(instances)} instances "
            f"(rank {rank}, L={max_lhs_len})"
        )

        tasks: List[CompositionTask] = [
            (rank, amb.w.letters, self.reduct(amb, amb.left), self.reduct(amb, amb.right))
            for amb in ambiguities
        ]
        joined = map_in_pool(_join_reducts, tasks, workers)

        records: List[CompositionRecord] = []
        failures: List[CompositionRecord] = []
        pair_counts: Dict[str, int] = {}
        for amb, (_, w, left, right), (nf_left, nf_right) in zip(ambiguities, tasks, joined):
            below = cmp_codes(left, w) == Ordering.LESS and cmp_codes(right, w) == Ordering.LESS
            record = CompositionRecord(
                ambiguity=amb,
                joinable=nf_left == nf_right,
                reducts_below=below,
                nf_left=Word.trusted(nf_left, rank),
                nf_right=Word.trusted(nf_right, rank),
            )
            records.append(record)
            key = amb.pair_key()
            pair_counts[key] = pair_counts.get(key, 0) + 1
            if not record.joinable:
                logger.warning(f"Composition not joinable: {record.to_line()}")
                failures.append(record)
            else:
                logger.debug(f"Joinable: {amb.w} ({amb.left} / {amb.right})")

        elapsed = time.perf_counter() - started
        logger.info(
            f"Confluence rank {rank}, L={max_lhs_len}: {len(records) - len(failures)}/"
            f"{len(records)} joinable in {elapsed:.2f}s"
        )
        return CompositionReport(
            rank=rank,
            max_lhs_len=max_lhs_len,
            instances=len(instances),
            total=len(records),
            joinable=len(records) - len(failures),
            failures=failures,
            records=records,
            pair_counts=pair_counts,
        )


# Global service instance
_confluence_service = None


def get_confluence_service() -> ConfluenceService:
    """Get global confluence service instance"""
    global _confluence_service
    if _confluence_service is None:
        _confluence_service = ConfluenceService()
    return _confluence_service
