"""Shared test fixtures."""

import sys
import os

import pytest

# Ensure project root is on path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps at six edges")


@pytest.fixture
def genus_one_map():
    """The genus-1 map alpha=(1,3)(2,4), sigma=(L,3,2,1,4)(R)."""
    from maps.unicellular import make_unicellular
    return make_unicellular(2, [(1, 3), (2, 4)])


@pytest.fixture
def single_arc():
    from maps.unicellular import make_unicellular
    return make_unicellular(1, [(1, 2)])


@pytest.fixture
def two_backbone_diagram():
    """Two backbones 1..2 and 3..4 joined by (1,3) and (2,4)."""
    from rna.diagram import make_diagram
    return make_diagram(4, [(1, 2), (3, 4)], [(1, 3), (2, 4)])


@pytest.fixture
def tmp_db(tmp_path):
    """Return a DatabaseManager backed by a temp file."""
    db_path = str(tmp_path / "test.db")
    from models.database import DatabaseManager
    return DatabaseManager(db_path=db_path)


@pytest.fixture
def results_store(tmp_db):
    """Return a ResultsStore using a temp database."""
    from models.results_store import ResultsStore
    return ResultsStore(tmp_db)
