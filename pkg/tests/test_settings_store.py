"""Settings defaults and persistence."""

from config import settings_store
from config.settings import APP_SETTINGS, DEFAULTS, get_settings
from utils.validators import validate_edge_bound


class TestSettingsStore:
    def test_save_and_load(self, tmp_path, monkeypatch):
        monkeypatch.setattr(settings_store, "_SETTINGS_DIR", tmp_path)
        monkeypatch.setattr(settings_store, "_SETTINGS_FILE", tmp_path / "settings.json")
        settings_store.save_settings({"workers": 4, "unknown": True})
        loaded = settings_store.load_settings()
        assert loaded["workers"] == 4
        assert loaded["log_level"] == DEFAULTS["log_level"]
        assert "unknown" not in loaded
        assert get_settings()["workers"] == 4

    def test_load_missing(self, tmp_path, monkeypatch):
        monkeypatch.setattr(settings_store, "_SETTINGS_FILE", tmp_path / "missing.json")
        assert settings_store.load_settings() == DEFAULTS

    def test_corrupt_file(self, tmp_path, monkeypatch):
        path = tmp_path / "settings.json"
        path.write_text("{not json")
        monkeypatch.setattr(settings_store, "_SETTINGS_FILE", path)
        assert settings_store.load_settings() == DEFAULTS

    def test_clear(self, tmp_path, monkeypatch):
        monkeypatch.setattr(settings_store, "_SETTINGS_DIR", tmp_path)
        monkeypatch.setattr(settings_store, "_SETTINGS_FILE", tmp_path / "settings.json")
        settings_store.save_settings({"workers": 2})
        settings_store.clear_settings()
        assert not (tmp_path / "settings.json").exists()
        assert settings_store.load_settings() == DEFAULTS


class TestEdgeBound:
    def test_limit(self):
        limit = APP_SETTINGS["max_edges_limit"]
        assert validate_edge_bound(limit) == (True, "")
        ok, msg = validate_edge_bound(limit + 1)
        assert not ok
        assert str(limit) in msg
        assert not validate_edge_bound(-1)[0]
