import pytest

from utils.config import load_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from the repository config with the guards in force."""
    monkeypatch.delenv("WORDREP_GUARD_OVERRIDE", raising=False)
    monkeypatch.delenv("WORDREP_CONFIG", raising=False)
    load_settings.cache_clear()
    yield
    load_settings.cache_clear()
