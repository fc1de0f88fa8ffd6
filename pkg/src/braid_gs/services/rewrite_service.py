"""
Rewrite Service
Applies the basis relations until a word is S-irreducible
"""

import logging
import random
from typing import List, Optional, Tuple

from ..config import get_settings
from ..core import all_hits, find_matches, first_hit, lhs_codes, rhs_codes, validate_params
from ..core.matching import Hit, to_match
from ..errors import ConfigurationError, StaleMatchError, StepGuardExceeded
from ..models import (
    Codes,
    Policy,
    PolicyKind,
    RewriteTrace,
    RuleMatch,
    TraceStep,
    Word,
)

logger = logging.getLogger(__name__)


class RewriteEngine:
    """
    Rewriting with the Groebner-Shirshov basis of B_{n+1}

    Every step strictly decreases the deg-lex order, so normalize terminates;
    the step guard only trips on an implementation defect.
    """

    def __init__(self, step_guard: Optional[int] = None):
        if step_guard is None:
            step_guard = get_settings().NORMALIZE_STEP_GUARD
        if step_guard < 1:
            raise ConfigurationError(f"step guard must be at least 1, got {step_guard}")
        self.step_guard = step_guard

        logger.info(f"RewriteEngine initialized (step guard {self.step_guard})")

    def find_matches(self, w: Word) -> List[RuleMatch]:
        return find_matches(w)

    def first_match(self, w: Word) -> Optional[RuleMatch]:
        """The match the deterministic policy applies next"""
        hit = first_hit(w.letters, w.rank)
        return to_match(hit) if hit else None

    def is_irreducible(self, w: Word) -> bool:
        return first_hit(w.letters, w.rank) is None

    def apply_match(self, w: Word, m: RuleMatch) -> Word:
        """Replace the LHS occurrence of m by the rule's RHS"""
        validate_params(m.rule, m.params, w.rank)
        lhs = lhs_codes(m.rule, m.params, w.rank)
        if m.end - m.start != len(lhs) or w.letters[m.start:m.end] != lhs:
            raise StaleMatchError(f"Match {m} does not agree with the word: {w}")
        rhs = rhs_codes(m.rule, m.params, w.rank)
        return Word.trusted(w.letters[:m.start] + rhs + w.letters[m.end:], w.rank)

    def normalize_codes(
        self,
        codes: Codes,
        rank: int,
        policy: Optional[Policy] = None,
    ) -> Tuple[Codes, int]:
        """Irreducible form of raw codes and the number of steps taken"""
        current, steps, _ = self._run(codes, rank, policy or Policy.deterministic(), None)
        return current, steps

    def normalize(
        self,
        w: Word,
        policy: Optional[Policy] = None,
        record_trace: bool = True,
    ) -> Tuple[Word, RewriteTrace]:
        """
        Rewrite w to its unique S-irreducible form

        Args:
            w: Input word
            policy: Deterministic (leftmost, cheap rules first) or random(seed)
            record_trace: Keep every intermediate word

        Returns:
            The irreducible word and the rewrite trace
        """
        recorded: Optional[List[Tuple[Codes, Hit, Codes]]] = [] if record_trace else None
        current, steps, recorded = self._run(
            w.letters, w.rank, policy or Policy.deterministic(), recorded
        )

        trace = RewriteTrace()
        for before, hit, after in recorded or []:
            trace.steps.append(
                TraceStep(
                    before=Word.trusted(before, w.rank),
                    match=to_match(hit),
                    after=Word.trusted(after, w.rank),
                )
            )
        logger.debug(f"Normalized {len(w)} letters in {steps} steps")
        return Word.trusted(current, w.rank), trace

    def _run(self, codes: Codes, rank: int, policy: Policy, recorded):
        rng = random.Random(policy.seed) if policy.kind == PolicyKind.RANDOM else None
        current = codes
        steps = 0
        while True:
            if rng is None:
                hit = first_hit(current, rank)
            else:
                hits = all_hits(current, rank)
                hit = rng.choice(hits) if hits else None
            if hit is None:
                return current, steps, recorded

            steps += 1
            if steps > self.step_guard:
                raise StepGuardExceeded(
                    f"Normalization exceeded {self.step_guard} steps "
                    f"(word length {len(current)}); this is an engine defect"
                )
            rewritten = (
                current[:hit.start]
                + rhs_codes(hit.rule, hit.params, rank)
                + current[hit.end:]
            )
            if recorded is not None:
                recorded.append((current, hit, rewritten))
            current = rewritten


# Global engine instance
_rewrite_engine = None


def get_rewrite_engine() -> RewriteEngine:
    """Get global rewrite engine instance"""
    global _rewrite_engine
    if _rewrite_engine is None:
        _rewrite_engine = RewriteEngine()
    return _rewrite_engine
