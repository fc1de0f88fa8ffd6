"""Shared fixtures"""

import pytest

from braid_gs.cli import parse_word
from braid_gs.oracles import ArtinOracle, GarsideOracle, PositiveClassOracle
from braid_gs.services import BraidGroupService, ConfluenceService, RewriteEngine


@pytest.fixture
def engine():
    return RewriteEngine()


@pytest.fixture
def group(engine):
    return BraidGroupService(engine)


@pytest.fixture
def artin_oracle():
    return ArtinOracle()


@pytest.fixture
def positive_oracle():
    return PositiveClassOracle()


@pytest.fixture
def garside_oracle(positive_oracle):
    return GarsideOracle(positive_oracle)


@pytest.fixture
def confluence():
    return ConfluenceService()


@pytest.fixture
def word():
    """Parse a signed word at a given rank: word("a1 a2^-1", 2)"""
    return parse_word
