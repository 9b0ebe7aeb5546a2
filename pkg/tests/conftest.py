"""
    Shared pytest configuration: src/ on the import path, as PYTHONPATH=src does for jobs.
"""
import pathlib
import sys

SRC_DIR = pathlib.Path(__file__).resolve().parents[1] / "src"
if str(SRC_DIR) not in sys.path:
    sys.path.insert(0, str(SRC_DIR))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive runs at m = 6 or 7 (deselect with -m 'not slow')")
