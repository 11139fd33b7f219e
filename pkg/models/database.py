"""Database setup and session management for the result store."""

import logging
from pathlib import Path

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from config.settings import DATA_DIR

logger = logging.getLogger(__name__)

Base = declarative_base()


def get_data_directory() -> Path:
    """Get the application data directory."""
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    return DATA_DIR


class DatabaseManager:
    """SQLite engine for cached count tables and verification runs."""

    def __init__(self, db_path: str = None):
        if db_path is None:
            self.db_path = get_data_directory() / "results.db"
        else:
            self.db_path = Path(db_path)
            self.db_path.parent.mkdir(parents=True, exist_ok=True)

        self.engine = create_engine(f"sqlite:///{self.db_path}", echo=False)

        # Models must be imported so their tables are registered on Base
        from models.count_entry import CountEntry  # noqa: F401
        from models.verification_run import VerificationRun  # noqa: F401

        Base.metadata.create_all(self.engine)
        self.SessionLocal = sessionmaker(bind=self.engine, expire_on_commit=False)
        logger.debug("result store at %s", self.db_path)

    def get_session(self):
        """Return a new database session."""
        return self.SessionLocal()
