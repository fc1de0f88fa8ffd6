"""Derived identity checks"""

import random

import pytest

from braid_gs.services import FORMULAS, LemmaFormula, LemmaService


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_no_counterexamples(group, rank):
    report = LemmaService(group).lemma_suite(rank, trials=15, seed=1)
    assert report.counterexamples == []
    assert len(report.tallies) == len(FORMULAS)
    assert all(tally.passed == tally.trials for tally in report.tallies)


def test_suite_is_reproducible(group):
    service = LemmaService(group)
    first = service.lemma_suite(3, trials=5, seed=42)
    second = service.lemma_suite(3, trials=5, seed=42)
    assert first == second


def test_formula_selection(group):
    report = LemmaService(group).lemma_suite(3, trials=4, seed=0, names=["e-word", "head-to-tail"])
    assert [tally.formula for tally in report.tallies] == ["e-word", "head-to-tail"]
    assert [tally.trials for tally in report.tallies] == [4, 4]


def test_formulas_out_of_range_are_skipped(group):
    report = LemmaService(group).lemma_suite(1, trials=3, seed=0, names=["lambda-shift"])
    assert report.tallies[0].trials == 0


def test_false_identity_is_reported(group):
    bogus = LemmaFormula(
        "bogus",
        "a_i = a_1",
        lambda n: (2, n),
        lambda rng, i, n: ((i + 1,), (2,), {"i": i}),
    )
    counterexample = LemmaService(group).check_instance(bogus, 2, bogus.build(None, 2, 2), 2)
    assert counterexample is not None
    assert counterexample.formula == "bogus"
    assert counterexample.nf_lhs.to_text() == "D^0 | a2"
    assert counterexample.params == {"i": "2"}


def test_every_formula_builds_valid_words():
    rng = random.Random(0)
    for formula in FORMULAS:
        low, high = formula.i_range(4)
        for i in range(low, high + 1):
            lhs, rhs, _ = formula.build(rng, i, 4)
            assert all(2 <= code <= 5 for code in lhs + rhs), formula.name
