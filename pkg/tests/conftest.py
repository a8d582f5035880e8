import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Keep every test away from the user's on-disk result cache."""
    monkeypatch.setenv("RAMSEY_TRAILS_CACHE", str(tmp_path / "cache"))
