# test/test_config.py
import sys
from pathlib import Path

import pytest

sys.path.append(str(Path(__file__).parent.parent))  # Add project root to path
from core.config import ConfigManager, load_config
from models.config_models import Config
from models.errors import ConfigError


def test_defaults():
    config = ConfigManager().get_default_config()
    assert config.engine.default_rank == 2
    assert config.oracle.bound is None
    assert config.oracle.probe_bound == 4
    assert config.bench.lengths == [10_000, 20_000, 40_000]
    assert config.log_level == "WARNING"


def test_yaml_round_trip(tmp_path):
    manager = ConfigManager()
    config = Config()
    config.bench.lengths = [100, 200]
    config.oracle.bound = 5
    config.output.json = True
    path = tmp_path / ".polyconj.yaml"
    manager.save_to_file(config, path)

    loaded = manager.load_from_file(path)
    assert loaded.bench.lengths == [100, 200]
    assert loaded.oracle.bound == 5
    assert loaded.output.json is True


def test_json_file(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text('{"engine": {"default_rank": 3}, "log_level": "info"}', encoding="utf-8")
    config = load_config(path)
    assert config.engine.default_rank == 3
    assert config.log_level == "INFO"


def test_discovery(tmp_path):
    (tmp_path / ".polyconj.yml").write_text("bench:\n  trials: 7\n", encoding="utf-8")
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    assert load_config(start_dir=nested).bench.trials == 7


def test_invalid_configs(tmp_path):
    manager = ConfigManager()
    with pytest.raises(ConfigError):
        manager.load_from_file(tmp_path / "missing.yaml")

    bad_level = tmp_path / "level.yaml"
    bad_level.write_text("log_level: loud\n", encoding="utf-8")
    with pytest.raises(ConfigError):
        manager.load_from_file(bad_level)

    bad_bound = tmp_path / "bound.json"
    bad_bound.write_text('{"oracle": {"bound": -1}}', encoding="utf-8")
    with pytest.raises(ConfigError):
        manager.load_from_file(bad_bound)

    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    with pytest.raises(ConfigError):
        manager.load_from_file(broken)

    toml = tmp_path / "config.toml"
    toml.write_text("", encoding="utf-8")
    with pytest.raises(ConfigError):
        manager.load_from_file(toml)
