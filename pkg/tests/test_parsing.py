"""Word grammar and text formats"""

import pytest

from braid_gs.cli import parse_normal_form, parse_positive_word, parse_word, read_items, split_pair
from braid_gs.config import Settings
from braid_gs.errors import IndexRangeError, ParseError
from braid_gs.models import NormalForm, Word


def test_parse_letters():
    assert parse_word("a1 a2^-1 D", 2).letters == ((2, 1), (3, -1), (1, 1))
    assert parse_word("D^-2 . a3", 3).letters == ((0, 1), (0, 1), (4, 1))
    assert parse_word("D^-1", 2).letters == ((0, 1),)
    assert parse_word("D^0 a1", 2).letters == ((2, 1),)
    assert parse_word("  ", 2).letters == ()


def test_parse_errors():
    with pytest.raises(ParseError) as excinfo:
        parse_word("a1 x", 2)
    assert excinfo.value.position == 3
    assert excinfo.value.token_index == 1
    with pytest.raises(ParseError):
        parse_word("a1^2", 2)


def test_delta_power_is_capped(monkeypatch):
    with pytest.raises(ParseError, match="longer than 1000000 letters"):
        parse_word("D^1000000000", 2)
    monkeypatch.setattr(
        "braid_gs.cli.parsing.get_settings", lambda: Settings(MAX_WORD_LENGTH=5)
    )
    assert len(parse_word("a1 D^-4", 2)) == 5
    with pytest.raises(ParseError, match=r"at 'D\^3'"):
        parse_word("a1 a2 a1 D^3", 2)


def test_index_range():
    with pytest.raises(IndexRangeError, match="index out of range"):
        parse_word("a9", 2)
    with pytest.raises(IndexRangeError):
        parse_word("a0", 2)
    with pytest.raises(IndexRangeError):
        parse_word("a1", 0)


def test_positive_words():
    assert parse_positive_word("a1 a2", 2) == Word.from_indices([1, 2], 2)
    with pytest.raises(ParseError):
        parse_positive_word("a1 D", 2)


@pytest.mark.parametrize("text", ["D^1 | ", "D^-1 | a1 a2", "D^0 | a2 a1"])
def test_normal_form_text(text):
    nf = parse_normal_form(text, 2)
    assert isinstance(nf, NormalForm)
    assert nf.to_text() == text


def test_malformed_normal_form():
    with pytest.raises(ParseError):
        parse_normal_form("a1 a2", 2)


def test_read_items(tmp_path):
    batch = tmp_path / "batch.txt"
    batch.write_text("# header\n\na1 a2\n  a2  \n", encoding="utf-8")
    assert list(read_items(str(batch))) == [(3, "a1 a2"), (4, "a2")]


def test_split_pair():
    assert split_pair("a1 , a2", 1) == ("a1 ", " a2")
    with pytest.raises(ParseError):
        split_pair("a1 a2", 7)
