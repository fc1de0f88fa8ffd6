"""Settings and verification profiles"""

import pytest

from braid_gs.config import Settings, get_profile, load_profiles
from braid_gs.errors import ConfigurationError


def test_default_settings():
    settings = Settings()
    assert settings.MAX_RANK == 64
    assert settings.WORKERS == 1


def test_environment_override(monkeypatch):
    monkeypatch.setenv("BFS_CLASS_CAP", "500")
    assert Settings().BFS_CLASS_CAP == 500


def test_bundled_profiles():
    profiles = load_profiles()
    assert {"quick", "acceptance"} <= set(profiles)
    acceptance = get_profile("acceptance")
    assert [(b.rank, b.max_lhs_len) for b in acceptance.confluence] == [(2, 8), (3, 6)]
    assert acceptance.lemmas.ranks == [2, 3, 4, 5, 6]
    assert acceptance.oracle.max_length == 5


def test_unknown_profile():
    with pytest.raises(ConfigurationError, match="Unknown profile"):
        get_profile("nightly")


def test_malformed_profiles(tmp_path):
    path = tmp_path / "profiles.yml"
    path.write_text("profiles: [unclosed\n", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_profiles(str(path))


def test_invalid_profile(tmp_path):
    path = tmp_path / "profiles.yml"
    path.write_text("profiles:\n  bad:\n    confluence:\n      - rank: 1\n", encoding="utf-8")
    with pytest.raises(ConfigurationError, match="Invalid profile 'bad'"):
        load_profiles(str(path))


def test_missing_profiles_file(tmp_path):
    with pytest.raises(ConfigurationError):
        load_profiles(str(tmp_path / "none.yml"))
