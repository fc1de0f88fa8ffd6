"""Instance enumeration, ambiguities and composition checks"""

import pytest

from braid_gs.core import lhs_codes
from braid_gs.errors import ResourceLimitError
from braid_gs.models import AmbiguityKind, RuleId
from braid_gs.services import ConfluenceService


def test_instance_counts(confluence):
    assert len(confluence.enumerate_instances(2, 2)) == 6
    assert len(confluence.enumerate_instances(2, 3)) == 8
    assert confluence.enumerate_instances(2, 0) == []


def test_instance_order(confluence):
    rules = [instance.rule for instance in confluence.enumerate_instances(3, 6)]
    order = [RuleId.R5A, RuleId.R5B, RuleId.R4, RuleId.R4P, RuleId.R2, RuleId.R1, RuleId.R3]
    positions = [order.index(rule) for rule in rules]
    assert positions == sorted(positions)
    assert rules.count(RuleId.R2) == 1


def test_length_three_adds_braid_and_ladder(confluence):
    extra = [str(instance) for instance in confluence.enumerate_instances(2, 3)[6:]]
    assert extra == ["R1(i=1,j=2,V=,W=)", "R3(V1=)"]


def test_enumeration_budget():
    with pytest.raises(ResourceLimitError) as excinfo:
        ConfluenceService(budget=3).enumerate_instances(2, 2)
    assert excinfo.value.reached == 4


def test_overlap_of_delta_rules(confluence):
    instances = confluence.enumerate_instances(2, 2)
    ambiguities = confluence.find_ambiguities(instances, 2)
    found = [
        amb
        for amb in ambiguities
        if str(amb.w) == "a1 D D^-1" and amb.left.rule == RuleId.R4
    ]
    assert len(found) == 1
    amb = found[0]
    assert amb.kind == AmbiguityKind.OVERLAP
    assert amb.right.rule == RuleId.R5A
    assert (amb.left.start, amb.right.start) == (0, 1)
    assert confluence.reduct(amb, amb.left) == (1, 3, 0)
    assert confluence.reduct(amb, amb.right) == (2,)


def test_braid_self_overlap(confluence):
    ambiguities = confluence.find_ambiguities(confluence.enumerate_instances(2, 3), 2)
    words = {str(amb.w) for amb in ambiguities if amb.pair_key() == "R1&R1"}
    assert "a2 a1 a2 a1 a2" in words


@pytest.mark.parametrize("rank, limit", [(2, 4), (3, 4)])
def test_ambiguities_are_symmetric(confluence, rank, limit):
    instances = confluence.enumerate_instances(rank, limit)
    forward = confluence.find_ambiguities(instances, rank)
    backward = confluence.find_ambiguities(list(reversed(instances)), rank)
    assert sorted(map(str, forward)) == sorted(map(str, backward))
    for amb in forward:
        for match in (amb.right, amb.left):
            lhs = lhs_codes(match.rule, match.params, rank)
            assert amb.w.letters[match.start:match.end] == lhs


def test_compositions_are_joinable(confluence):
    report = confluence.check_compositions(2, 6, workers=1)
    assert report.failures == []
    assert report.total > 0
    assert report.joinable == report.total
    assert sum(report.pair_counts.values()) == report.total
    assert all(record.reducts_below for record in report.records)
    assert "failures: 0" in report.to_lines()


def test_rank_three_compositions(confluence):
    report = confluence.check_compositions(3, 5, workers=1)
    assert report.failures == []
    assert report.instances == len(confluence.enumerate_instances(3, 5))


def test_records_are_sorted(confluence):
    report = confluence.check_compositions(2, 4, workers=1)
    keys = [record.ambiguity.w.deglex_key() for record in report.records]
    assert keys == sorted(keys)


def test_pool_gives_the_same_records(confluence):
    inline = confluence.check_compositions(2, 4, workers=1)
    pooled = confluence.check_compositions(2, 4, workers=2)
    assert [r.model_dump(mode="json") for r in pooled.records] == [
        r.model_dump(mode="json") for r in inline.records
    ]


def test_report_json(confluence):
    payload = confluence.check_compositions(2, 3, workers=1).model_dump(mode="json")
    assert payload["failures"] == []
    assert payload["instances"] == 8
    assert len(payload["records"]) == payload["total"]


def test_record_json_uses_word_tokens(confluence):
    report = confluence.check_compositions(2, 3, workers=1)
    record = next(r for r in report.records if str(r.ambiguity.w) == "a1 D D^-1")
    payload = record.model_dump(mode="json")
    assert payload["ambiguity"]["w"] == ["a1", "D", "D^-1"]
    assert payload["ambiguity"]["kind"] == "overlap"
    assert payload["ambiguity"]["left"] == str(record.ambiguity.left)
    assert payload["nf_left"] == payload["nf_right"] == record.nf_left.tokens()
    assert list(report.model_dump(mode="json")["pair_counts"]) == sorted(report.pair_counts)
