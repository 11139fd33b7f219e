"""One cell of a count table."""

from datetime import datetime, timezone

from sqlalchemy import Column, DateTime, Integer, String, UniqueConstraint

from models.database import Base


class CountEntry(Base):
    __tablename__ = "count_entries"
    __table_args__ = (UniqueConstraint("kind", "genus", "edges", "split_range"),)

    id = Column(Integer, primary_key=True)
    kind = Column(String(10), nullable=False)
    genus = Column(Integer, nullable=False)
    edges = Column(Integer, nullable=False)
    count = Column(Integer, nullable=False)
    split_range = Column(String(20), nullable=False, default="inclusive")
    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc))
