"""Application settings."""

from pathlib import Path

APP_SETTINGS = {
    "app_name": "unicellular",
    "version": "1.0.0",
    # Exhaustive enumeration grows like (2n-1)!!; past this bound runs take hours.
    "max_edges_limit": 7,
}

# Settings file and default result database live here.
DATA_DIR = Path.home() / ".unicellular"

DEFAULTS = {
    "workers": 1,
    "log_level": "WARNING",
    "database_path": None,
}


def get_settings() -> dict:
    """Get effective settings, using stored user overrides if available."""
    try:
        from config.settings_store import load_settings
        return load_settings()
    except Exception:
        pass
    return dict(DEFAULTS)
