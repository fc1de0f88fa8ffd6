"""Batch evaluation"""

import pytest

from braid_gs.cli import parse_word
from braid_gs.errors import StepGuardExceeded
from braid_gs.services import BatchService, BraidGroupService, RewriteEngine, map_in_pool

WORDS = ["a2 a1 a2", "a1^-1", "", "a1 D a1", "a2 a1 a2 a2"]
EXPECTED = ["D^1 | ", "D^-1 | a1 a2", "D^0 | ", "D^1 | a2 a1", "D^1 | a2"]


def test_map_in_pool_keeps_order():
    items = [-3, 1, -4, 1, -5, 9]
    assert map_in_pool(abs, items, workers=1) == [3, 1, 4, 1, 5, 9]
    assert map_in_pool(abs, items, workers=2) == [3, 1, 4, 1, 5, 9]
    assert map_in_pool(abs, [], workers=2) == []


async def test_normalize_batch_inline(group):
    service = BatchService(group)
    forms = await service.normalize_batch([parse_word(text, 2) for text in WORDS], workers=1)
    assert [nf.to_text() for nf in forms] == EXPECTED


async def test_normalize_batch_in_pool(group):
    service = BatchService(group)
    forms = await service.normalize_batch([parse_word(text, 2) for text in WORDS], workers=2)
    assert [nf.to_text() for nf in forms] == EXPECTED


async def test_equal_batch(group):
    pairs = [
        (parse_word("a1 a2 a1", 2), parse_word("D", 2)),
        (parse_word("a1", 2), parse_word("a2", 2)),
        (parse_word("a1 a1^-1", 2), parse_word("", 2)),
    ]
    service = BatchService(group)
    assert await service.equal_batch(pairs, workers=1) == [True, False, True]
    assert await service.equal_batch(pairs, workers=2) == [True, False, True]


async def test_invert_batch(group):
    service = BatchService(group)
    forms = await service.invert_batch([parse_word("a1", 2), parse_word("D", 2)], workers=1)
    assert [nf.to_text() for nf in forms] == ["D^-1 | a1 a2", "D^-1 | "]


@pytest.mark.parametrize("workers", [1, 2])
async def test_pool_honours_the_injected_engine(workers):
    service = BatchService(BraidGroupService(RewriteEngine(step_guard=1)))
    words = [parse_word("a2 a1 a2", 2), parse_word("a1 a2 a1", 2)]
    with pytest.raises(StepGuardExceeded):
        await service.normalize_batch(words, workers=workers)
    with pytest.raises(StepGuardExceeded):
        await service.invert_batch(words, workers=workers)


async def test_pool_with_a_custom_step_guard():
    service = BatchService(BraidGroupService(RewriteEngine(step_guard=50)))
    forms = await service.normalize_batch([parse_word(text, 2) for text in WORDS], workers=2)
    assert [nf.to_text() for nf in forms] == EXPECTED
