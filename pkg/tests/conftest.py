from pathlib import Path

import pytest

from pbci import parse_algebra, parse_selfmap, validate
from pbci.search import SearchQuery, search

FIXTURE_DIR = Path(__file__).parent / "fixtures"
FIXTURE_NAMES = ("proper5", "group6", "mixed6", "cyclic3", "bck5")


def fixture_text(name: str) -> str:
    return (FIXTURE_DIR / f"{name}.pbci").read_text(encoding="utf-8")


def load_algebra(name: str):
    return validate(parse_algebra(fixture_text(name)))


def m(algebra, text):
    """Shorthand: parse a self-map given as an image row."""
    return parse_selfmap(text, algebra)


@pytest.fixture(scope="session")
def proper5():
    return load_algebra("proper5")


@pytest.fixture(scope="session")
def group6():
    return load_algebra("group6")


@pytest.fixture(scope="session")
def mixed6():
    return load_algebra("mixed6")


@pytest.fixture(scope="session")
def cyclic3():
    return load_algebra("cyclic3")


@pytest.fixture(scope="session")
def bck5():
    return load_algebra("bck5")


@pytest.fixture(scope="session")
def all_fixtures(proper5, group6, mixed6, cyclic3, bck5):
    return {
        "proper5": proper5,
        "group6": group6,
        "mixed6": mixed6,
        "cyclic3": cyclic3,
        "bck5": bck5,
    }


@pytest.fixture(scope="session")
def small_pool(all_fixtures):
    """Every algebra of size <= 4 plus the five table fixtures."""
    pool = list(all_fixtures.values())
    for n in (1, 2, 3, 4):
        pool.extend(validate(spec) for spec in search(SearchQuery(size=n)))
    return pool
