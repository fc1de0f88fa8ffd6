"""
Lemma Service
Randomized check of the derived braid identities used in the composition proofs

Each formula builds both sides from the word constructors of braid_gs.core
and the engine must give them the same normal form.
"""

import logging
import random
import time
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple, Union

from ..core import (
    LambdaVariant,
    e_codes,
    flip_codes,
    lambda_codes,
    run_codes,
    shift_codes,
)
from ..models import (
    Codes,
    FormulaTally,
    LemmaCounterexample,
    LemmaReport,
    SignedWord,
    Word,
    artin,
    check_rank,
    ladder_codes,
)
from .group_service import BraidGroupService, get_group_service

logger = logging.getLogger(__name__)

MAX_FREE_LENGTH = 5

FULL = LambdaVariant.FULL
MINUS = LambdaVariant.MINUS
MINUSMINUS = LambdaVariant.MINUSMINUS

# (lhs, rhs, free parameters by name)
Instance = Tuple[Codes, Codes, Dict[str, Union[Codes, int]]]


class LemmaFormula(NamedTuple):
    """An identity with one index parameter i and random free words"""
    name: str
    statement: str
    i_range: Callable[[int], Tuple[int, int]]
    build: Callable[[random.Random, int, int], Instance]


def random_codes(rng: random.Random, low: int, high: int) -> Codes:
    """Random word over a_low..a_high of length 0..5; empty if the alphabet is"""
    if low > high:
        return ()
    length = rng.randint(0, MAX_FREE_LENGTH)
    return tuple(artin(rng.randint(low, high)) for _ in range(length))


def _lam(i: int, variant: LambdaVariant = FULL) -> Codes:
    return lambda_codes(i, variant)


def _a(i: int) -> Codes:
    return (artin(i),)


def _lambda_shift(rng: random.Random, i: int, n: int) -> Instance:
    w = random_codes(rng, 2, i)
    return _lam(i) + w, shift_codes(w, -1) + _lam(i), {"W": w}


def _lambda_minus_shift(rng: random.Random, i: int, n: int) -> Instance:
    w = random_codes(rng, 3, i)
    return _lam(i, MINUS) + w, shift_codes(w, -1) + _lam(i, MINUS), {"W": w}


def _close_minus(rng: random.Random, i: int, n: int) -> Instance:
    return _a(i) + _lam(i - 1) + _lam(i, MINUS), _lam(i - 1) + _lam(i), {}


def _close_full(rng: random.Random, i: int, n: int) -> Instance:
    return _a(i) + _lam(i - 1) + _lam(i), _lam(i - 1) + _lam(i) + _a(1), {}


def _close_minusminus(rng: random.Random, i: int, n: int) -> Instance:
    return _a(i) + _lam(i - 1) + _lam(i, MINUSMINUS), _lam(i - 1, MINUS) + _lam(i), {}


def _close_with_word(rng: random.Random, i: int, n: int) -> Instance:
    v = random_codes(rng, 1, i - 1)
    lhs = _a(i) + _lam(i - 1) + v + _lam(i)
    rhs = _lam(i - 1) + _lam(i) + _a(1) + shift_codes(v, 1)
    return lhs, rhs, {"V": v}


def _ladder_words(rng: random.Random, i: int) -> List[Codes]:
    return [random_codes(rng, 1, m) for m in range(1, i)]


def _interleave(parts: List[Codes]) -> Codes:
    """Λ_1 V_1 Λ_2 V_2 ... Λ_{i-1} V_{i-1}"""
    codes: Codes = ()
    for m, part in enumerate(parts, 1):
        codes += _lam(m) + part
    return codes


def _shifted_tail(parts: List[Codes], i: int) -> Codes:
    """V_1^(i-1) V_2^(i-2) ... V_{i-1}'"""
    codes: Codes = ()
    for m, part in enumerate(parts, 1):
        codes += shift_codes(part, i - m)
    return codes


def _ladder_close(rng: random.Random, i: int, n: int) -> Instance:
    parts = _ladder_words(rng, i)
    lhs = _a(i) + _interleave(parts) + _lam(i)
    rhs = ladder_codes(i) + _a(1) + _shifted_tail(parts, i)
    return lhs, rhs, {f"V{m}": part for m, part in enumerate(parts, 1)}


def _ladder_close_flip(rng: random.Random, i: int, n: int) -> Instance:
    v = random_codes(rng, 1, i - 1)
    parts = _ladder_words(rng, i)
    lhs = _a(i) + v + _interleave(parts) + _lam(i)
    rhs = ladder_codes(i) + _a(1) + flip_codes(v, i) + _shifted_tail(parts, i)
    words: Dict[str, Union[Codes, int]] = {"V": v}
    words.update({f"V{m}": part for m, part in enumerate(parts, 1)})
    return lhs, rhs, words


def _close_two_words(rng: random.Random, i: int, n: int) -> Instance:
    v = random_codes(rng, 1, i - 2)
    w = random_codes(rng, 2, i - 1)
    lhs = _a(i) + v + _lam(i - 1) + w + _lam(i, MINUS)
    rhs = _lam(i - 1) + _lam(i) + shift_codes(v, 2) + shift_codes(w, 1)
    return lhs, rhs, {"V": v, "W": w}


def _minus_ladder(i: int) -> Codes:
    codes: Codes = ()
    for m in range(2, i + 1):
        codes += _lam(m, MINUS)
    return codes


def _minus_ladder_flip(rng: random.Random, i: int, n: int) -> Instance:
    w = random_codes(rng, 1, i - 1)
    return shift_codes(w, 1) + _minus_ladder(i), _minus_ladder(i) + flip_codes(w, i), {"W": w}


def _lambda_flip(rng: random.Random, i: int, n: int) -> Instance:
    w = random_codes(rng, 1, i - 2)
    return flip_codes(w, i - 1) + _lam(i), _lam(i) + flip_codes(w, i), {"W": w}


def _ascending_ladder(rng: random.Random, i: int, n: int) -> Instance:
    codes: Codes = ()
    for j in range(i, 0, -1):
        codes += tuple(artin(m) for m in range(j, i + 1))
    return codes, ladder_codes(i), {}


def _run_commute(rng: random.Random, i: int, n: int) -> Instance:
    j = rng.randint(1, i)
    w = random_codes(rng, j, i)
    run = run_codes(i + 1, j)
    return w + run, run + shift_codes(w, 1), {"j": j, "W": w}


def _lambda_commute(rng: random.Random, i: int, n: int) -> Instance:
    v = random_codes(rng, 1, i - 1)
    return v + _lam(i), _lam(i) + shift_codes(v, 1), {"V": v}


def _head_to_tail(rng: random.Random, i: int, n: int) -> Instance:
    ladder: Codes = ()
    for m in range(i + 1, n + 1):
        ladder += _lam(m)
    return _a(1) + ladder, ladder + _a(n - i + 1), {}


def _ladder_conjugation(rng: random.Random, i: int, n: int) -> Instance:
    v = random_codes(rng, 1, i)
    return v + ladder_codes(i), ladder_codes(i) + flip_codes(v, i), {"V": v}


def _e_word(rng: random.Random, i: int, n: int) -> Instance:
    return e_codes(i, n) + _a(i), ladder_codes(n), {}


def _from_two(n: int) -> Tuple[int, int]:
    return 2, n


FORMULAS: Tuple[LemmaFormula, ...] = (
    LemmaFormula("lambda-shift", "L_i W(2,i) = W^(-1) L_i", _from_two, _lambda_shift),
    LemmaFormula(
        "lambda-minus-shift", "L_i^(-) W(3,i) = W^(-1) L_i^(-)", _from_two, _lambda_minus_shift
    ),
    LemmaFormula("close-minus", "a_i L_{i-1} L_i^(-) = L_{i-1} L_i", _from_two, _close_minus),
    LemmaFormula("close-full", "a_i L_{i-1} L_i = L_{i-1} L_i a_1", _from_two, _close_full),
    LemmaFormula(
        "close-minusminus",
        "a_i L_{i-1} L_i^(--) = L_{i-1}^(-) L_i",
        _from_two,
        _close_minusminus,
    ),
    LemmaFormula(
        "close-with-word",
        "a_i L_{i-1} V_{i-1} L_i = L_{i-1} L_i a_1 V_{i-1}'",
        _from_two,
        _close_with_word,
    ),
    LemmaFormula(
        "ladder-close",
        "a_i L_1 V_1 ... L_{i-1} V_{i-1} L_i = D_i a_1 V_1^(i-1) ... V_{i-1}'",
        _from_two,
        _ladder_close,
    ),
    LemmaFormula(
        "ladder-close-flip",
        "a_i V(1,i-1) L_1 V_1 ... L_{i-1} V_{i-1} L_i = D_i a_1 V^D_i V_1^(i-1) ... V_{i-1}'",
        _from_two,
        _ladder_close_flip,
    ),
    LemmaFormula(
        "close-two-words",
        "a_i V(1,i-2) L_{i-1} W(2,i-1) L_i^(-) = L_{i-1} L_i V^(2) W'",
        _from_two,
        _close_two_words,
    ),
    LemmaFormula(
        "minus-ladder-flip",
        "W'(1,i-1) L_2^(-) ... L_i^(-) = L_2^(-) ... L_i^(-) W^D_i",
        _from_two,
        _minus_ladder_flip,
    ),
    LemmaFormula(
        "lambda-flip", "W(1,i-2)^D_{i-1} L_i = L_i W^D_i", _from_two, _lambda_flip
    ),
    LemmaFormula(
        "ascending-ladder",
        "a_i . a_{i-1} a_i ... a_1 ... a_i = D_i",
        lambda n: (1, n),
        _ascending_ladder,
    ),
    LemmaFormula(
        "run-commute",
        "W(j,i) a_{i+1,j} = a_{i+1,j} W'",
        lambda n: (1, n - 1),
        _run_commute,
    ),
    LemmaFormula("lambda-commute", "V_{i-1} L_i = L_i V_{i-1}'", _from_two, _lambda_commute),
    LemmaFormula(
        "head-to-tail",
        "a_1 L_{i+1} ... L_n = L_{i+1} ... L_n a_{n-i+1}",
        lambda n: (1, n - 1),
        _head_to_tail,
    ),
    LemmaFormula(
        "ladder-conjugation", "V(1,i) D_i = D_i V^D_i", lambda n: (1, n), _ladder_conjugation
    ),
    LemmaFormula("e-word", "E_i a_i = D", lambda n: (1, n), _e_word),
)

FORMULAS_BY_NAME: Dict[str, LemmaFormula] = {formula.name: formula for formula in FORMULAS}


def _render(value: Union[Codes, int], rank: int) -> str:
    if isinstance(value, int):
        return str(value)
    return str(Word.trusted(value, rank)) or "1"


class LemmaService:
    """
    Property checks of the derived identities

    Every formula draws its own seeded generator, so a counterexample is
    reproducible from (formula, seed, trial) alone.
    """

    def __init__(self, group: Optional[BraidGroupService] = None):
        self.group = group or get_group_service()

        logger.info(f"LemmaService initialized with {len(FORMULAS)} formulas")

    def check_instance(
        self, formula: LemmaFormula, i: int, instance: Instance, rank: int
    ) -> Optional[LemmaCounterexample]:
        """None if both sides get the same normal form"""
        lhs_codes, rhs_codes, words = instance
        lhs = Word.trusted(lhs_codes, rank)
        rhs = Word.trusted(rhs_codes, rank)
        nf_lhs = self.group.normal_form(SignedWord.from_word(lhs))
        nf_rhs = self.group.normal_form(SignedWord.from_word(rhs))
        if nf_lhs == nf_rhs:
            return None
        return LemmaCounterexample(
            formula=formula.name,
            i=i,
            params={name: _render(value, rank) for name, value in words.items()},
            lhs=lhs,
            rhs=rhs,
            nf_lhs=nf_lhs,
            nf_rhs=nf_rhs,
        )

    def lemma_suite(
        self,
        rank: int,
        trials: int,
        seed: int,
        names: Optional[List[str]] = None,
    ) -> LemmaReport:
        """
        Check every formula on random instantiations

        Args:
            rank: Ambient rank n
            trials: Instantiations per formula
            seed: Base seed of the per-formula generators
            names: Restrict to these formulas

        Returns:
            Per-formula tallies and every counterexample found
        """
        check_rank(rank)
        started = time.perf_counter()
        formulas = [FORMULAS_BY_NAME[name] for name in names] if names else list(FORMULAS)
        report = LemmaReport(rank=rank, trials=trials, seed=seed)

        for formula in formulas:
            low, high = formula.i_range(rank)
            tally = FormulaTally(formula=formula.name)
            if low > high:
                report.tallies.append(tally)
                continue
            rng = random.Random(f"{seed}:{formula.name}")
            for _ in range(trials):
                i = rng.randint(low, high)
                counterexample = self.check_instance(
                    formula, i, formula.build(rng, i, rank), rank
                )
                tally.trials += 1
                if counterexample is None:
                    tally.passed += 1
                else:
                    logger.warning(f"Lemma counterexample: {counterexample.to_line()}")
                    report.counterexamples.append(counterexample)
            report.tallies.append(tally)

        logger.info(
            f"Lemma suite rank {rank}: {len(report.counterexamples)} counterexamples "
            f"over {len(formulas)} formulas in {time.perf_counter() - started:.2f}s"
        )
        return report


# Global service instance
_lemma_service = None


def get_lemma_service() -> LemmaService:
    """Get global lemma service instance"""
    global _lemma_service
    if _lemma_service is None:
        _lemma_service = LemmaService()
    return _lemma_service
