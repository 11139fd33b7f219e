"""Result store: database layer, cached count tables and logged runs."""

import pytest

from config.constants import SplitRange
from enumeration.counts import count_table
from enumeration.verify import ReportCell, VerificationReport, verify_recursion
from models.count_entry import CountEntry
from models.verification_run import VerificationRun


@pytest.fixture(scope="module")
def table3():
    return count_table(3)


class TestDatabaseCreation:
    def test_tables_created(self, tmp_db):
        from sqlalchemy import inspect
        inspector = inspect(tmp_db.engine)
        names = inspector.get_table_names()
        assert "count_entries" in names
        assert "verification_runs" in names


class TestCountCache:
    def test_save_and_load(self, results_store, table3):
        stored = results_store.save_count_table(table3)
        assert stored == len(table3.rows())
        assert results_store.load_count_table(3) == table3

    def test_smaller_table_from_larger(self, results_store, table3):
        results_store.save_count_table(table3)
        loaded = results_store.load_count_table(2, max_bicellular_n=1)
        assert loaded.c(0, 2) == 2
        assert loaded.c2(0, 1) == 1
        with pytest.raises(KeyError):
            loaded.c(0, 3)

    def test_missing_cells(self, results_store, table3):
        results_store.save_count_table(table3)
        assert results_store.load_count_table(4) is None
        assert results_store.load_count_table(3, SplitRange.STRICT) is None

    def test_empty_store(self, results_store):
        assert results_store.load_count_table(0) is None

    def test_save_replaces(self, results_store, tmp_db, table3):
        results_store.save_count_table(table3)
        results_store.save_count_table(table3)
        session = tmp_db.get_session()
        try:
            assert session.query(CountEntry).count() == len(table3.rows())
            entry = session.query(CountEntry).filter(
                CountEntry.kind == "bi", CountEntry.genus == 0, CountEntry.edges == 2).first()
            assert entry.count == 8
            assert entry.split_range == "inclusive"
        finally:
            session.close()

    def test_cached_table_verifies(self, results_store, table3):
        results_store.save_count_table(table3)
        report = verify_recursion(3, table=results_store.load_count_table(3))
        assert report.passed


class TestVerificationRuns:
    def test_record_and_list(self, results_store, tmp_db):
        passing = VerificationReport("recursion", cells=[ReportCell(0, 1, 0, 1, 1)], catalan_ok=True)
        failing = VerificationReport("bijection", cells=[ReportCell(0, 1, 0, 0, 1)])
        first = results_store.record_run("recursion", passing, edges=2)
        second = results_store.record_run("bijection", failing, edges=2, genus=1)
        assert second > first

        runs = results_store.recent_runs()
        assert [r.id for r in runs] == [second, first]
        assert runs[0].passed is False
        assert runs[0].genus == 1
        assert runs[1].summary == "recursion PASS cells=1 failures=0"

        session = tmp_db.get_session()
        try:
            assert session.query(VerificationRun).count() == 2
        finally:
            session.close()

    def test_limit(self, results_store):
        report = VerificationReport("recursion")
        for _ in range(3):
            results_store.record_run("recursion", report)
        assert len(results_store.recent_runs(limit=2)) == 2
