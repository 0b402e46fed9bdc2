import pytest

from severi.config import SETTINGS_ENV, Settings, get_data_path, load_settings
from severi.exceptions import SeveriError


def test_packaged_defaults(monkeypatch):
    monkeypatch.delenv(SETTINGS_ENV, raising=False)
    assert load_settings() == Settings()


def test_environment_override(tmp_path, monkeypatch):
    path = tmp_path / "s.yaml"
    path.write_text("output_format: csv\nrecursion_limit: 20000\n")
    monkeypatch.setenv(SETTINGS_ENV, str(path))
    settings = load_settings()
    assert settings.output_format == "csv"
    assert settings.recursion_limit == 20000
    assert settings.log_level == "WARNING"


def test_invalid_settings(tmp_path):
    path = tmp_path / "s.yaml"
    path.write_text("output_format: xml\n")
    with pytest.raises(SeveriError):
        load_settings(str(path))
    path.write_text("colour: blue\n")
    with pytest.raises(SeveriError):
        load_settings(str(path))


def test_missing_data_file():
    assert get_data_path("settings.yaml").name == "settings.yaml"
    with pytest.raises(FileNotFoundError):
        get_data_path("no-such-file.yaml")


def test_missing_settings_file(tmp_path, monkeypatch):
    monkeypatch.setenv(SETTINGS_ENV, str(tmp_path / "absent.yaml"))
    with pytest.raises(SeveriError, match="cannot read settings"):
        load_settings()
