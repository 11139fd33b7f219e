"""User settings persistence: save/load to ~/.unicellular/settings.json."""

import json

from config.settings import DATA_DIR, DEFAULTS

_SETTINGS_DIR = DATA_DIR
_SETTINGS_FILE = _SETTINGS_DIR / "settings.json"


def load_settings() -> dict:
    try:
        if _SETTINGS_FILE.exists():
            data = json.loads(_SETTINGS_FILE.read_text())
            return {**DEFAULTS, **{k: v for k, v in data.items() if k in DEFAULTS}}
    except Exception:
        pass
    return dict(DEFAULTS)


def save_settings(data: dict):
    try:
        _SETTINGS_DIR.mkdir(parents=True, exist_ok=True)
        _SETTINGS_FILE.write_text(json.dumps(data, indent=2))
    except Exception:
        pass


def clear_settings():
    try:
        if _SETTINGS_FILE.exists():
            _SETTINGS_FILE.unlink()
    except Exception:
        pass
