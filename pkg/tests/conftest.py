import pathlib

import pytest

from oredango import textio

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture
def sample_board():
    return textio.parse_board(fixture_text("sample4x4.odg"))


@pytest.fixture
def pair_board():
    return textio.parse_board(fixture_text("pairblock.odg"))
