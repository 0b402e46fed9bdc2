#!/usr/bin/env python3
"""
Standalone entry point for the severi binary.

PyInstaller builds start here; it puts the checkout on sys.path so the
package and its data files (settings.yaml, checks/) resolve the same way
as in a development tree.
"""
import sys
from pathlib import Path

current_dir = Path(__file__).parent
sys.path.insert(0, str(current_dir))

from severi.main import cli_entry

if __name__ == "__main__":
    cli_entry()
