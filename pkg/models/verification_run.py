"""Verification run log."""

from datetime import datetime, timezone

from sqlalchemy import Boolean, Column, DateTime, Integer, String, Text

from models.database import Base


class VerificationRun(Base):
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True)
    kind = Column(String(20), nullable=False)
    edges = Column(Integer, nullable=True)
    genus = Column(Integer, nullable=True)
    passed = Column(Boolean, default=False)
    cells = Column(Integer, default=0)
    summary = Column(Text, nullable=True)
    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc))
