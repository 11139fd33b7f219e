"""Persistence of count tables and verification runs."""

import logging
from typing import Optional

from config.constants import CountKind, SplitRange
from enumeration.counts import CountTable
from enumeration.verify import VerificationReport
from models.count_entry import CountEntry
from models.database import DatabaseManager
from models.verification_run import VerificationRun

logger = logging.getLogger(__name__)


class ResultsStore:
    """Cache count tables and keep a log of verification runs."""

    def __init__(self, db_manager: DatabaseManager):
        self.db = db_manager

    def save_count_table(self, table: CountTable) -> int:
        """Store every cell of ``table``, replacing cells already stored. Returns the cell count."""
        session = self.db.get_session()
        try:
            rows = table.rows()
            for g, n, count, kind in rows:
                entry = session.query(CountEntry).filter(
                    CountEntry.kind == kind.value,
                    CountEntry.genus == g,
                    CountEntry.edges == n,
                    CountEntry.split_range == table.split_range.value,
                ).first()
                if entry is None:
                    session.add(CountEntry(kind=kind.value, genus=g, edges=n, count=count,
                                           split_range=table.split_range.value))
                else:
                    entry.count = count
            session.commit()
            logger.info("stored %d count cells (split=%s)", len(rows), table.split_range.value)
            return len(rows)
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    def load_count_table(self, max_n: int, split_range: SplitRange = SplitRange.INCLUSIVE,
                         max_bicellular_n: Optional[int] = None) -> Optional[CountTable]:
        """Rebuild a table from stored cells, or None if any cell is missing."""
        if max_bicellular_n is None:
            max_bicellular_n = max_n
        table = CountTable(max_n, max_bicellular_n, split_range)
        needed = {(kind, g, n) for g, n, _, kind in table.rows()}

        session = self.db.get_session()
        try:
            entries = session.query(CountEntry).filter(
                CountEntry.split_range == split_range.value).all()
        finally:
            session.close()

        for entry in entries:
            kind = CountKind(entry.kind)
            key = (kind, entry.genus, entry.edges)
            if key not in needed:
                continue
            needed.discard(key)
            if entry.count:
                target = table.uni if kind is CountKind.UNICELLULAR else table.bi
                target[(entry.genus, entry.edges)] = entry.count
        if needed:
            logger.debug("count cache miss: %d cells missing", len(needed))
            return None
        return table

    def record_run(self, kind: str, report: VerificationReport,
                   edges: Optional[int] = None, genus: Optional[int] = None) -> int:
        session = self.db.get_session()
        try:
            run = VerificationRun(
                kind=kind,
                edges=edges,
                genus=genus,
                passed=report.passed,
                cells=len(report.cells),
                summary=f"{kind} {'PASS' if report.passed else 'FAIL'} "
                        f"cells={len(report.cells)} failures={len(report.failures)}",
            )
            session.add(run)
            session.commit()
            session.refresh(run)
            return run.id
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    def recent_runs(self, limit: int = 10) -> list:
        session = self.db.get_session()
        try:
            return (session.query(VerificationRun)
                    .order_by(VerificationRun.id.desc())
                    .limit(limit)
                    .all())
        finally:
            session.close()
