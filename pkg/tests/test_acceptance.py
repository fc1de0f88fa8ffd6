"""Acceptance-scale verification runs

Deselect with: pytest -m "not slow"
"""

import random

import pytest

from braid_gs.config import get_profile
from braid_gs.core import Ordering, cmp_deglex, instantiate_lhs, instantiate_rhs
from braid_gs.models import Policy, RuleId, RuleParams, SignedWord, artin
from braid_gs.services import ConfluenceService, LemmaService, OracleCheckService
from braid_gs.services.oracle_check_service import random_signed_word

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def profile():
    return get_profile("acceptance")


def test_confluence_bounds(profile):
    service = ConfluenceService()
    for bound in profile.confluence:
        report = service.check_compositions(bound.rank, bound.max_lhs_len)
        assert report.failures == [], report.to_lines()[:10]


def test_lemma_suite(profile):
    service = LemmaService()
    for rank in profile.lemmas.ranks:
        report = service.lemma_suite(rank, profile.lemmas.trials, profile.lemmas.seed)
        assert report.counterexamples == [], report.to_lines()


def test_oracle_checks(profile):
    bounds = profile.oracle
    service = OracleCheckService()
    reports = [
        service.exhaustive(bounds.rank, bounds.max_length),
        service.sampled(bounds.sample_rank, bounds.sample_length, bounds.samples, bounds.seed),
        service.garside(
            bounds.rank,
            bounds.garside_length,
            bounds.garside_sample_rank,
            bounds.garside_sample_length,
            bounds.garside_samples,
            bounds.seed,
        ),
        service.embedding(bounds.rank, bounds.garside_length),
    ]
    for report in reports:
        assert report.disagreements == [], report.to_lines()[:10]


def test_bench_corpus(profile):
    bounds = profile.bench
    report = OracleCheckService().bench(bounds.rank, bounds.words, bounds.length, bounds.seed)
    assert report.words == bounds.words


def random_braid_params(rng, rank, bound):
    """R1 parameters with |V|, |W| <= bound"""
    i = rng.randint(1, rank - 1)
    v = tuple(artin(rng.randint(1, i - 1)) for _ in range(rng.randint(0, bound))) if i > 1 else ()
    size = rng.randint(0, bound)
    if size:
        low = rng.randint(1, i)
        w = (artin(i),) + tuple(artin(rng.randint(low, i)) for _ in range(size - 1))
        j = rng.randint(1, low)
    else:
        w = ()
        j = rng.randint(1, i + 1)
    return RuleParams(i=i, j=j, v=v, w=w)


def random_ladder_params(rng, rank, bound):
    """R3 parameters with |V_m| <= bound"""
    return RuleParams(
        ladder=tuple(
            tuple(artin(rng.randint(1, m)) for _ in range(rng.randint(0, bound)))
            for m in range(1, rank)
        )
    )


@pytest.mark.parametrize("rank", [2, 3, 4, 5])
def test_braid_and_ladder_rules_at_scale(artin_oracle, rank):
    rng = random.Random(rank)
    for _ in range(400):
        for rule, params in (
            (RuleId.R1, random_braid_params(rng, rank, 4)),
            (RuleId.R3, random_ladder_params(rng, rank, 4)),
        ):
            lhs = instantiate_lhs(rule, params, rank)
            rhs = instantiate_rhs(rule, params, rank)
            label = f"{rule.value}({params.describe(rule)})"
            assert cmp_deglex(rhs, lhs) == Ordering.LESS, label
            assert artin_oracle.oracle_equal(
                SignedWord.from_word(lhs), SignedWord.from_word(rhs)
            ), label


def test_normal_form_does_not_depend_on_policy(group):
    rng = random.Random(2024)
    for _ in range(1000):
        rank = rng.randint(1, 4)
        u = random_signed_word(rng, rank, rng.randint(0, 12))
        expected = group.normal_form(u)
        for seed in range(5):
            assert group.normal_form(u, Policy.random(seed)) == expected, str(u)
