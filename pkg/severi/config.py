"""Settings and packaged data files."""
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import jsonschema
import yaml

from .exceptions import SeveriError

SETTINGS_ENV = "SEVERI_CONFIG"

SETTINGS_SCHEMA = {
    "type": "object",
    "properties": {
        "log_level": {"enum": ["DEBUG", "INFO", "WARNING", "ERROR"]},
        "output_format": {"enum": ["text", "json", "csv"]},
        "recursion_limit": {"type": "integer", "minimum": 1000},
        "checks_file": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}


@dataclass
class Settings:
    log_level: str = "WARNING"
    output_format: str = "text"
    recursion_limit: int = 10000
    checks_file: Optional[str] = None


def get_data_path(name):
    """Locate a packaged data file, in development trees and PyInstaller binaries alike."""
    current_dir = Path(__file__).parent
    candidates = [current_dir / name]
    # PyInstaller unpacks data under _MEIPASS
    if hasattr(sys, "_MEIPASS"):
        candidates.append(Path(sys._MEIPASS) / "severi" / name)
    candidates += [
        Path.cwd() / "severi" / name,
        Path.cwd() / name,
    ]
    for path in candidates:
        if path.exists():
            return path
    raise FileNotFoundError(f"Data file {name!r} not found. Please ensure the package data is installed.")


def load_settings(path=None) -> Settings:
    """Read settings from ``path``, then $SEVERI_CONFIG, then the packaged defaults."""
    if path is None:
        path = os.environ.get(SETTINGS_ENV) or get_data_path("settings.yaml")
    try:
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
    except OSError as e:
        raise SeveriError(f"cannot read settings {path}: {e}")
    try:
        jsonschema.validate(data, SETTINGS_SCHEMA)
    except jsonschema.ValidationError as e:
        raise SeveriError(f"invalid settings in {path}: {e.message}")
    return Settings(**data)
