import os
import sys
from fractions import Fraction

import pytest

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(ROOT, "src"))

from repherd import io as rio
from repherd.fields import PrimeField, QQ

FIXTURES = os.path.join(ROOT, "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


_cache = {}


def load_fixture_algebra(name, field=None):
    key = (name, repr(field))
    if key not in _cache:
        _cache[key] = rio.load_algebra(fixture_path(name + ".json"), field=field)
    return _cache[key]


@pytest.fixture(scope="session")
def a2():
    return load_fixture_algebra("a2")


@pytest.fixture(scope="session")
def a3():
    return load_fixture_algebra("a3")


@pytest.fixture(scope="session")
def loop2():
    return load_fixture_algebra("loop2")


@pytest.fixture(scope="session")
def tilted4():
    return load_fixture_algebra("tilted4")


@pytest.fixture(scope="session")
def tilted5():
    return load_fixture_algebra("tilted5")


@pytest.fixture(scope="session")
def kron():
    return load_fixture_algebra("kron")


@pytest.fixture(scope="session")
def d4():
    return load_fixture_algebra("d4")


@pytest.fixture(scope="session")
def sq():
    return load_fixture_algebra("sq")


@pytest.fixture(scope="session")
def h5():
    return load_fixture_algebra("h5")


@pytest.fixture(scope="session")
def gf101():
    return PrimeField(101)


_catalogs = {}
_mains = {}


def catalog_of(alg, budget=None):
    """Session-memoized catalog (per algebra object and budget)."""
    from repherd.catalog import enumerate_indecomposables

    key = (id(alg), None if budget is None else (budget.max_modules, budget.max_total_dim))
    if key not in _catalogs:
        _catalogs[key] = enumerate_indecomposables(alg, budget)
    return _catalogs[key]


def main_report_of(alg):
    """Session-memoized main check report."""
    from repherd.checks import check_representation_hereditary

    if id(alg) not in _mains:
        _mains[id(alg)] = check_representation_hereditary(alg, catalog=catalog_of(alg))
    return _mains[id(alg)]


# test-local exact eliminator, independent of the package's rref
def plain_rank(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / pr[c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
    return rank
