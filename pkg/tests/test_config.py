"""Tests for the TOML configuration layer."""
import pytest
import toml

from mubplane.exceptions import UsageError
from mubplane.utils.config import CONFIG_FILENAME, Config, resolve_config_path


def test_defaults_without_file(tmp_path):
    config = Config()
    assert config.get("tolerance.certify") == 1e-9
    assert config.get("capacity.plane_order_max") == 32
    assert config.get("survey.search_cap") == 7
    assert config.get("search.step_rule") == "barzilai-borwein"


def test_missing_key_returns_default():
    assert Config().get("search.nope", 3) == 3
    assert Config().get("nope.deeper") is None


def test_set_and_save_round_trip(tmp_path):
    config = Config()
    config.set("search.restarts", 8)
    config.set("extra.note", "kept")
    written = config.save(tmp_path / "out" / CONFIG_FILENAME)

    reloaded = Config(written)
    assert reloaded.get("search.restarts") == 8
    assert reloaded.get("extra.note") == "kept"
    assert reloaded.get("search.max_iterations") == 5000


def test_file_in_working_directory_is_merged(tmp_path):
    (tmp_path / CONFIG_FILENAME).write_text(toml.dumps({"tolerance": {"certify": 1e-6}}))
    config = Config()
    assert config.get("tolerance.certify") == 1e-6
    # untouched keys in the same section keep their defaults
    assert config.get("tolerance.construct") == 1e-12


def test_environment_variable(tmp_path, monkeypatch):
    target = tmp_path / "elsewhere.toml"
    target.write_text(toml.dumps({"survey": {"search_cap": 9}}))
    monkeypatch.setenv("MUBPLANE_CONFIG", str(target))
    assert resolve_config_path() == target
    assert Config().get("survey.search_cap") == 9


def test_explicit_path_wins(tmp_path, monkeypatch):
    monkeypatch.setenv("MUBPLANE_CONFIG", str(tmp_path / "env.toml"))
    assert resolve_config_path(tmp_path / "cli.toml") == tmp_path / "cli.toml"


def test_missing_explicit_file(tmp_path):
    with pytest.raises(UsageError):
        Config(tmp_path / "absent.toml")


def test_malformed_file(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text("[search\nrestarts = ")
    with pytest.raises(UsageError):
        Config(bad)


def test_search_settings_is_a_copy():
    config = Config()
    settings = config.search_settings()
    settings["restarts"] = 1
    assert config.get("search.restarts") == 20
