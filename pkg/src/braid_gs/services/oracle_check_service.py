"""
Oracle Check Service
Engine-versus-oracle cross-checks and the normalization benchmark
"""

import logging
import random
import time
from itertools import product
from typing import Callable, Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

from ..models import (
    DELTA,
    DELTA_INV,
    BenchReport,
    OracleCheckReport,
    OracleDisagreement,
    SignedWord,
    Word,
    artin,
    check_rank,
    ladder_codes,
)
from ..oracles import (
    ArtinOracle,
    GarsideOracle,
    PositiveClassOracle,
    get_artin_oracle,
    get_garside_oracle,
    get_positive_oracle,
)
from .group_service import BraidGroupService, get_group_service

logger = logging.getLogger(__name__)

SignedLetter = Tuple[int, int]


def signed_alphabet(rank: int, delta: bool = True) -> List[SignedLetter]:
    """a1, a1^-1, ..., an, an^-1 and optionally D, D^-1"""
    letters = [(artin(i), sign) for i in range(1, rank + 1) for sign in (1, -1)]
    if delta:
        letters += [(DELTA, 1), (DELTA_INV, 1)]
    return letters


def all_signed_words(rank: int, max_length: int) -> Iterator[SignedWord]:
    """Every signed word of length <= max_length, shortest first"""
    alphabet = signed_alphabet(rank)
    for length in range(max_length + 1):
        for letters in product(alphabet, repeat=length):
            yield SignedWord.model_construct(letters=letters, rank=rank)


def all_positive_words(rank: int, max_length: int) -> Iterator[Word]:
    alphabet = [artin(i) for i in range(1, rank + 1)]
    for length in range(max_length + 1):
        for letters in product(alphabet, repeat=length):
            yield Word.trusted(letters, rank)


def random_signed_word(rng: random.Random, rank: int, length: int) -> SignedWord:
    alphabet = signed_alphabet(rank)
    return SignedWord.model_construct(
        letters=tuple(rng.choice(alphabet) for _ in range(length)), rank=rank
    )


def random_positive_word(rng: random.Random, rank: int, length: int) -> Word:
    return Word.trusted(tuple(artin(rng.randint(1, rank)) for _ in range(length)), rank)


def scramble(u: SignedWord, rng: random.Random, moves: int = 8) -> SignedWord:
    """
    Random word equal to u in the group

    Applies defining relations in either direction: inserted cancelling pairs,
    braid and far commutation moves, Delta expanded to its ladder.
    """
    n = u.rank
    letters = list(u.letters)
    for _ in range(moves):
        choice = rng.randrange(4)
        if choice == 0:
            code = artin(rng.randint(1, n))
            sign = rng.choice((1, -1))
            at = rng.randint(0, len(letters))
            letters[at:at] = [(code, sign), (code, -sign)]
        elif choice == 1 and len(letters) >= 2:
            p = rng.randrange(len(letters) - 1)
            (x, s), (y, t) = letters[p], letters[p + 1]
            if x > DELTA and y > DELTA and abs(x - y) >= 2:
                letters[p], letters[p + 1] = letters[p + 1], letters[p]
        elif choice == 2 and len(letters) >= 3:
            p = rng.randrange(len(letters) - 2)
            (x, s), (y, t), (z, r) = letters[p:p + 3]
            if x > DELTA and y > DELTA and x == z and abs(x - y) == 1 and s == t == r:
                letters[p:p + 3] = [(y, s), (x, s), (y, s)]
        elif choice == 3:
            spots = [p for p, (code, _) in enumerate(letters) if code in (DELTA, DELTA_INV)]
            if spots:
                p = rng.choice(spots)
                ladder = ladder_codes(n)
                if letters[p][0] == DELTA:
                    letters[p:p + 1] = [(code, 1) for code in ladder]
                else:
                    letters[p:p + 1] = [(code, -1) for code in reversed(ladder)]
    return SignedWord.model_construct(letters=tuple(letters), rank=n)


class OracleCheckService:
    """
    Cross-checks of the engine against the independent oracles

    Exhaustive checks compare two partitions of the same word list: one by
    engine normal form, one by oracle key.
    """

    def __init__(
        self,
        group: Optional[BraidGroupService] = None,
        artin_oracle: Optional[ArtinOracle] = None,
        positive: Optional[PositiveClassOracle] = None,
        garside: Optional[GarsideOracle] = None,
    ):
        self.group = group or get_group_service()
        self.artin = artin_oracle or get_artin_oracle()
        self.positive = positive or get_positive_oracle()
        self.garside_oracle = garside or get_garside_oracle()

        logger.info("OracleCheckService initialized")

    def _compare_partitions(
        self,
        report: OracleCheckReport,
        words: Sequence[SignedWord],
        engine_key: Callable[[SignedWord], Hashable],
        oracle_key: Callable[[SignedWord], Hashable],
    ) -> OracleCheckReport:
        """Record every pair on which the two partitions disagree, one per conflict"""
        first_by_engine: Dict[Hashable, Tuple[SignedWord, Hashable]] = {}
        first_by_oracle: Dict[Hashable, Tuple[SignedWord, Hashable]] = {}
        for u in words:
            e_key, o_key = engine_key(u), oracle_key(u)
            report.words += 1
            if e_key in first_by_engine:
                v, v_oracle = first_by_engine[e_key]
                report.comparisons += 1
                if v_oracle != o_key:
                    report.disagreements.append(
                        OracleDisagreement(left=v, right=u, engine_equal=True, oracle_equal=False)
                    )
            else:
                first_by_engine[e_key] = (u, o_key)
            if o_key in first_by_oracle:
                v, v_engine = first_by_oracle[o_key]
                report.comparisons += 1
                if v_engine != e_key:
                    report.disagreements.append(
                        OracleDisagreement(left=v, right=u, engine_equal=False, oracle_equal=True)
                    )
            else:
                first_by_oracle[o_key] = (u, e_key)
        return report

    def _artin_key(self, u: SignedWord) -> Hashable:
        return tuple(self.artin.automorphism_images(u))

    def exhaustive(self, rank: int, max_length: int) -> OracleCheckReport:
        """Engine equality against the Artin action on every signed word up to a length"""
        check_rank(rank)
        started = time.perf_counter()
        report = OracleCheckReport(rank=rank, mode="exhaustive")
        self._compare_partitions(
            report,
            list(all_signed_words(rank, max_length)),
            self.group.normal_form,
            self._artin_key,
        )
        self._log(report, started)
        return report

    def sampled(self, rank: int, length: int, samples: int, seed: int) -> OracleCheckReport:
        """Random pairs; every other pair is a scrambled copy so equal pairs occur"""
        check_rank(rank)
        started = time.perf_counter()
        rng = random.Random(seed)
        report = OracleCheckReport(rank=rank, mode="sampled")
        for index in range(samples):
            u = random_signed_word(rng, rank, rng.randint(0, length))
            if index % 2 == 0:
                v = scramble(u, rng)
            else:
                v = random_signed_word(rng, rank, rng.randint(0, length))
            engine_equal = self.group.equal(u, v)
            oracle_equal = self.artin.oracle_equal(u, v)
            report.words += 2
            report.comparisons += 1
            if engine_equal != oracle_equal:
                report.disagreements.append(
                    OracleDisagreement(
                        left=u, right=v, engine_equal=engine_equal, oracle_equal=oracle_equal
                    )
                )
        self._log(report, started)
        return report

    def _garside_one(self, report: OracleCheckReport, w: Word) -> None:
        u = SignedWord.from_word(w)
        nf = self.group.normal_form(u)
        expected = self.garside_oracle.garside_oracle(u)
        report.words += 1
        report.comparisons += 1
        detail = None
        if nf != expected:
            detail = f"engine {nf} / garside {expected}"
        elif self.positive.left_divisible_by_delta(nf.tail):
            detail = f"tail of {nf} is left divisible by Delta"
        if detail is not None:
            report.disagreements.append(
                OracleDisagreement(
                    left=u,
                    right=expected.to_signed_word(),
                    engine_equal=False,
                    oracle_equal=True,
                    detail=detail,
                )
            )

    def garside(
        self,
        rank: int,
        max_length: int,
        sample_rank: Optional[int] = None,
        sample_length: int = 0,
        samples: int = 0,
        seed: int = 0,
    ) -> OracleCheckReport:
        """
        Normal forms against the brute-force Garside form

        Args:
            rank: Rank of the exhaustive part
            max_length: Every positive word up to this length is checked
            sample_rank: Rank of the random part
            sample_length: Length bound of the random words
            samples: Number of random positive words
            seed: Seed of the random part

        Returns:
            Report with one disagreement per mismatch or Delta-divisible tail
        """
        check_rank(rank)
        started = time.perf_counter()
        report = OracleCheckReport(rank=rank, mode="garside")
        for w in all_positive_words(rank, max_length):
            self._garside_one(report, w)
        if samples:
            rng = random.Random(seed)
            target = sample_rank or rank
            check_rank(target)
            for _ in range(samples):
                self._garside_one(
                    report, random_positive_word(rng, target, rng.randint(0, sample_length))
                )
        self._log(report, started)
        return report

    def embedding(self, rank: int, max_length: int) -> OracleCheckReport:
        """Positive-class membership against group equality for positive words"""
        check_rank(rank)
        started = time.perf_counter()
        report = OracleCheckReport(rank=rank, mode="embedding")
        words = [SignedWord.from_word(w) for w in all_positive_words(rank, max_length)]
        self._compare_partitions(
            report,
            words,
            self.group.normal_form,
            lambda u: self.positive.min_rep_codes(tuple(code for code, _ in u.letters)),
        )
        self._log(report, started)
        return report

    def bench(self, rank: int, words: int, length: int, seed: int) -> BenchReport:
        """Time normalization over a seeded corpus of random signed words"""
        check_rank(rank)
        rng = random.Random(seed)
        corpus = [random_signed_word(rng, rank, length) for _ in range(words)]
        total_steps = 0
        started = time.perf_counter()
        for u in corpus:
            _, steps = self.group.normal_form_with_steps(u)
            total_steps += steps
        seconds = time.perf_counter() - started
        logger.info(f"Bench rank {rank}: {words} words of length {length} in {seconds:.2f}s")
        return BenchReport(
            rank=rank,
            words=words,
            max_length=length,
            seed=seed,
            seconds=seconds,
            total_steps=total_steps,
        )

    def _log(self, report: OracleCheckReport, started: float) -> None:
        elapsed = time.perf_counter() - started
        message = (
            f"Oracle check {report.mode} rank {report.rank}: {report.words} words, "
            f"{report.comparisons} comparisons, {len(report.disagreements)} disagreements "
            f"in {elapsed:.2f}s"
        )
        if report.disagreements:
            logger.warning(message)
        else:
            logger.info(message)


# Global service instance
_oracle_check_service = None


def get_oracle_check_service() -> OracleCheckService:
    """Get global oracle check service instance"""
    global _oracle_check_service
    if _oracle_check_service is None:
        _oracle_check_service = OracleCheckService()
    return _oracle_check_service
