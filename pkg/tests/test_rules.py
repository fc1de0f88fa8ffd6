"""Rule schemas and LHS matching"""

import pytest

from braid_gs.core import Ordering, cmp_deglex, instantiate, instantiate_lhs, instantiate_rhs
from braid_gs.errors import IndexRangeError, StaleMatchError
from braid_gs.models import RuleId, RuleParams, SignedWord, Word, artin


def w(indices, rank):
    return Word.from_indices(indices, rank)


def test_braid_schema_without_words():
    params = RuleParams(i=1, j=2)
    assert str(instantiate_lhs(RuleId.R1, params, 2)) == "a2 a1 a2"
    assert str(instantiate_rhs(RuleId.R1, params, 2)) == "a1 a2 a1"


def test_braid_schema_with_words():
    params = RuleParams(i=2, j=1, v=(artin(1),), w=(artin(2),))
    assert str(instantiate_lhs(RuleId.R1, params, 3)) == "a3 a2 a1 a2 a3 a2 a1"
    assert str(instantiate_rhs(RuleId.R1, params, 3)) == "a2 a3 a2 a1 a2 a1 a3"


def test_ladder_and_delta_rules():
    ladder = RuleParams(ladder=((artin(1),),))
    assert str(instantiate_lhs(RuleId.R3, ladder, 2)) == "a1 a1 a2 a1"
    assert str(instantiate_rhs(RuleId.R3, ladder, 2)) == "D a2"
    assert str(instantiate_rhs(RuleId.R4, RuleParams(l=1), 3)) == "D a3"
    assert str(instantiate_rhs(RuleId.R4P, RuleParams(l=3), 3)) == "D^-1 a1"
    assert len(instantiate_rhs(RuleId.R5A, RuleParams(), 3)) == 0


def test_parameter_ranges():
    with pytest.raises(IndexRangeError):
        instantiate_lhs(RuleId.R2, RuleParams(s=2, k=1), 3)
    with pytest.raises(IndexRangeError):
        instantiate_lhs(RuleId.R1, RuleParams(i=2, j=1), 2)
    with pytest.raises(IndexRangeError):
        instantiate_lhs(RuleId.R1, RuleParams(i=2, j=1, w=(artin(1),)), 3)
    with pytest.raises(IndexRangeError):
        instantiate_lhs(RuleId.R3, RuleParams(ladder=()), 3)


def test_every_rule_decreases_deglex(confluence):
    for rank, limit in ((2, 6), (3, 7)):
        for instance in confluence.enumerate_instances(rank, limit):
            lhs, rhs = instantiate(instance)
            assert cmp_deglex(rhs, lhs) == Ordering.LESS, str(instance)


def test_rule_sides_agree_under_artin_action(confluence, artin_oracle):
    for instance in confluence.enumerate_instances(3, 7):
        lhs, rhs = instantiate(instance)
        assert artin_oracle.oracle_equal(
            SignedWord.from_word(lhs), SignedWord.from_word(rhs)
        ), str(instance)


def test_find_matches_order(engine):
    matches = engine.find_matches(w([2, 1, 2, 1], 2))
    assert [(m.rule, m.start, m.end, m.params.j) for m in matches] == [
        (RuleId.R1, 0, 4, 1),
        (RuleId.R1, 0, 3, 2),
        (RuleId.R3, 1, 4, None),
    ]


def test_braid_match_spans(engine):
    matches = engine.find_matches(w([3, 2, 1, 2, 3, 2, 1], 3))
    braid = [m for m in matches if m.rule == RuleId.R1 and m.start == 0]
    assert [m.params.j for m in braid] == [1, 2]
    assert braid[0].v_span == (2, 3)
    assert braid[0].w_span == (3, 4)


def test_far_letters_break_braid_match(engine):
    # a3 between a2 and its closing a2 is not in V(1,i-1) or W(j,i) for i = 1
    matches = engine.find_matches(w([2, 1, 3, 2], 3))
    assert all(m.rule != RuleId.R1 for m in matches)


def test_irreducible_words(engine):
    assert engine.is_irreducible(w([1, 2], 2))
    assert engine.is_irreducible(w([1, 1, 1], 2))
    assert engine.is_irreducible(Word.empty(2))
    assert not engine.is_irreducible(w([3, 1], 3))


def test_apply_match(engine):
    u = w([2, 1, 2], 2)
    match = engine.first_match(u)
    assert str(engine.apply_match(u, match)) == "a1 a2 a1"


def test_stale_match(engine):
    match = engine.first_match(w([2, 1, 2], 2))
    with pytest.raises(StaleMatchError):
        engine.apply_match(w([1, 2, 1], 2), match)
