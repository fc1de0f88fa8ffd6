"""Artin action, positive class and Garside oracles"""

import random

import pytest

from braid_gs.cli import parse_word
from braid_gs.errors import DomainError, InternalError, ResourceLimitError
from braid_gs.models import SignedWord, Word
from braid_gs.oracles import (
    FreeGroupElem,
    PositiveClassOracle,
    desugar_delta,
    free_inverse,
    free_reduce,
)
from braid_gs.services.oracle_check_service import all_positive_words, random_signed_word


def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, -2, 2, 2)) == (1, 2)


def test_free_group_elements_are_reduced():
    with pytest.raises(InternalError):
        FreeGroupElem(letters=(1, -1))
    assert str(FreeGroupElem(letters=())) == "1"


def test_artin_generator_action(artin_oracle):
    assert artin_oracle.automorphism_images(parse_word("a1", 2)) == [(1, 2, -1), (1,), (3,)]
    assert (
        str(artin_oracle.artin_automorphism(parse_word("a1", 2)))
        == "x1 -> x1 x2 x1^-1, x2 -> x1, x3 -> x3"
    )


def test_artin_inverse_undoes_generator(artin_oracle):
    assert artin_oracle.is_identity(parse_word("a2 a2^-1 a1^-1 a1", 2))
    assert not artin_oracle.is_identity(parse_word("a1", 2))


def test_delta_desugaring():
    assert str(desugar_delta(parse_word("D", 2))) == "a1 a2 a1"
    assert str(desugar_delta(parse_word("D^-1", 2))) == "a1^-1 a2^-1 a1^-1"


def test_oracle_equal(artin_oracle):
    assert artin_oracle.oracle_equal(parse_word("a1 a2 a1", 2), parse_word("D", 2))
    assert artin_oracle.oracle_equal(parse_word("a1 a1^-1", 2), parse_word("", 2))
    assert artin_oracle.oracle_equal(parse_word("a1 D", 3), parse_word("D a3", 3))
    assert not artin_oracle.oracle_equal(parse_word("a1", 2), parse_word("a2", 2))
    assert not artin_oracle.oracle_equal(parse_word("a1 a2", 2), parse_word("a2 a1", 2))


def substitute(outer, inner):
    """Images of outer ∘ inner: every letter of an inner image replaced by its outer image"""
    composed = []
    for image in inner:
        letters = []
        for letter in image:
            letters.extend(outer[letter - 1] if letter > 0 else free_inverse(outer[-letter - 1]))
        composed.append(free_reduce(letters))
    return composed


def test_artin_action_is_a_homomorphism(artin_oracle):
    rng = random.Random(13)
    for _ in range(1000):
        rank = rng.randint(1, 3)
        u = random_signed_word(rng, rank, rng.randint(0, 4))
        v = random_signed_word(rng, rank, rng.randint(0, 4))
        assert artin_oracle.automorphism_images(u + v) == substitute(
            artin_oracle.automorphism_images(u), artin_oracle.automorphism_images(v)
        ), f"{u} , {v}"


def test_positive_class(positive_oracle):
    cls = positive_oracle.positive_class(Word.from_indices([1, 2, 1], 2))
    assert {str(member) for member in cls} == {"a1 a2 a1", "a2 a1 a2"}
    cls = positive_oracle.positive_class(Word.from_indices([3, 1], 3))
    assert {str(member) for member in cls} == {"a1 a3", "a3 a1"}


@pytest.mark.parametrize(
    "indices, rank",
    [([1, 2, 1, 2], 2), ([2, 1, 3, 2], 3), ([1, 3, 2, 1, 3], 3), ([3, 2, 1, 4, 3], 4)],
)
def test_positive_class_is_stable_from_every_member(positive_oracle, indices, rank):
    start = Word.from_indices(indices, rank)
    members = positive_oracle.positive_class(start)
    assert start in members
    for member in members:
        assert positive_oracle.positive_class(member) == members


def test_positive_min_rep(positive_oracle):
    assert str(positive_oracle.positive_min_rep(Word.from_indices([2, 1, 2], 2))) == "a1 a2 a1"
    assert str(positive_oracle.positive_min_rep(Word.from_indices([3, 1], 3))) == "a1 a3"
    assert str(positive_oracle.positive_min_rep(Word.from_indices([2, 1], 2))) == "a2 a1"


def test_positive_class_limits(positive_oracle):
    with pytest.raises(ResourceLimitError):
        positive_oracle.positive_class(Word.from_indices([1, 2, 1], 2), cap=1)
    with pytest.raises(ResourceLimitError):
        PositiveClassOracle(cap=1).positive_class(Word.from_indices([1, 2, 1], 2))
    with pytest.raises(DomainError):
        positive_oracle.positive_class(Word.of([1, 2], 2))


def test_left_divisibility(positive_oracle):
    assert positive_oracle.left_divisible_by_delta(Word.from_indices([2, 1, 2], 2))
    assert positive_oracle.left_divisible_by_delta(Word.from_indices([2, 1, 2, 2], 2))
    assert not positive_oracle.left_divisible_by_delta(Word.from_indices([1, 2], 2))


@pytest.mark.parametrize(
    "text, rank, expected",
    [
        ("a2 a1 a2 a2", 2, "D^1 | a2"),
        ("a1^-1", 2, "D^-1 | a1 a2"),
        ("a1 D a1", 2, "D^1 | a2 a1"),
        ("a3 a1", 3, "D^0 | a1 a3"),
    ],
)
def test_garside_oracle(garside_oracle, text, rank, expected):
    assert garside_oracle.garside_oracle(parse_word(text, rank)).to_text() == expected


def test_garside_agrees_with_engine_on_positive_words(group, garside_oracle):
    for w in all_positive_words(3, 4):
        u = SignedWord.from_word(w)
        assert group.normal_form(u) == garside_oracle.garside_oracle(u), str(w)


def test_garside_agrees_with_engine_on_signed_words(group, garside_oracle):
    rng = random.Random(13)
    for _ in range(40):
        u = random_signed_word(rng, 2, rng.randint(0, 5))
        assert group.normal_form(u) == garside_oracle.garside_oracle(u), str(u)
