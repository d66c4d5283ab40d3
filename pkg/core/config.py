# core/config.py
"""Configuration management for polyconj."""

import json
from pathlib import Path
from typing import Optional

import yaml

from models.config_models import (
    BenchConfig, Config, EngineConfig, OracleConfig, OutputConfig,
)
from models.errors import ConfigError

import logging
logger = logging.getLogger(__name__)

CONFIG_STEM = ".polyconj"
_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class ConfigManager:
    """Manages loading, saving, and accessing configuration."""

    def __init__(self):
        self._config: Optional[Config] = None

    def load_from_file(self, config_path: Path) -> Config:
        """
        Load configuration from file.

        Args:
            config_path: Path to config file (JSON or YAML)

        Returns:
            Loaded Config instance
        """
        if not config_path.exists():
            raise ConfigError(f"Config file not found: {config_path}")

        # Determine file type
        if config_path.suffix in ['.yaml', '.yml']:
            data = self._load_yaml(config_path)
        elif config_path.suffix == '.json':
            data = self._load_json(config_path)
        else:
            raise ConfigError(f"Unsupported config format: {config_path.suffix}")

        self._config = self._deserialize(data or {})
        return self._config

    def _load_json(self, path: Path) -> dict:
        """Load config from JSON file."""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path}: {e}") from e

    def _load_yaml(self, path: Path) -> dict:
        """Load config from YAML file."""
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"{path}: {e}") from e

    def _deserialize(self, data: dict) -> Config:
        """Convert dict to Config instance."""
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a mapping")

        engine_data = data.get("engine", {}) or {}
        oracle_data = data.get("oracle", {}) or {}
        bench_data = data.get("bench", {}) or {}
        output_data = data.get("output", {}) or {}

        bench_defaults = BenchConfig()
        try:
            config = Config(
                engine=EngineConfig(
                    default_rank=int(engine_data.get("default_rank", 2)),
                ),
                oracle=OracleConfig(
                    bound=oracle_data.get("bound"),
                    probe_bound=int(oracle_data.get("probe_bound", 4)),
                    congruence_depth=int(oracle_data.get("congruence_depth", 6)),
                    o_search_bound=int(oracle_data.get("o_search_bound", 4)),
                ),
                bench=BenchConfig(
                    rank=int(bench_data.get("rank", 2)),
                    lengths=[int(n) for n in bench_data.get("lengths", bench_defaults.lengths)],
                    trials=int(bench_data.get("trials", 3)),
                    seed=int(bench_data.get("seed", 0)),
                ),
                output=OutputConfig(
                    json=bool(output_data.get("json", False)),
                ),
                log_level=str(data.get("log_level", "WARNING")).upper(),
                verbose=bool(data.get("verbose", False)),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid configuration value: {e}") from e

        if config.log_level not in _LOG_LEVELS:
            raise ConfigError(f"unknown log level {config.log_level!r}")
        if config.oracle.bound is not None and config.oracle.bound < 0:
            raise ConfigError("oracle.bound must be non-negative")
        return config

    def _serialize(self, config: Config) -> dict:
        """Convert Config instance to dict."""
        return {
            "engine": {
                "default_rank": config.engine.default_rank,
            },
            "oracle": {
                "bound": config.oracle.bound,
                "probe_bound": config.oracle.probe_bound,
                "congruence_depth": config.oracle.congruence_depth,
                "o_search_bound": config.oracle.o_search_bound,
            },
            "bench": {
                "rank": config.bench.rank,
                "lengths": list(config.bench.lengths),
                "trials": config.bench.trials,
                "seed": config.bench.seed,
            },
            "output": {
                "json": config.output.json,
            },
            "log_level": config.log_level,
            "verbose": config.verbose,
        }

    def save_to_file(self, config: Config, output_path: Path):
        """Save configuration to file."""
        output_path.parent.mkdir(parents=True, exist_ok=True)
        data = self._serialize(config)

        if output_path.suffix in ['.yaml', '.yml']:
            with open(output_path, 'w', encoding='utf-8') as f:
                yaml.safe_dump(data, f, default_flow_style=False)
        else:
            with open(output_path, 'w', encoding='utf-8') as f:
                json.dump(data, f, indent=2)

    def get_default_config(self) -> Config:
        """Get default configuration."""
        return Config()

    def find_config_file(self, start_dir: Path) -> Optional[Path]:
        """
        Search for .polyconj.yaml / .yml / .json in start_dir and up to 4 parents.

        Returns:
            Path to config file if found, None otherwise
        """
        current = start_dir.resolve()

        for _ in range(5):
            for ext in ['.yaml', '.yml', '.json']:
                config_path = current / f"{CONFIG_STEM}{ext}"
                if config_path.exists():
                    return config_path

            parent = current.parent
            if parent == current:  # Reached root
                break
            current = parent

        return None


# Global config manager instance
_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """Get global config manager instance."""
    global _manager
    if _manager is None:
        _manager = ConfigManager()
    return _manager


def load_config(config_path: Optional[Path] = None, start_dir: Optional[Path] = None) -> Config:
    """
    Load configuration with smart defaults.

    Args:
        config_path: Explicit path to config file
        start_dir: Directory to start the search from (default: cwd)

    Returns:
        Config instance
    """
    manager = get_config_manager()

    if config_path:
        return manager.load_from_file(Path(config_path))

    found = manager.find_config_file(start_dir or Path.cwd())
    if found:
        logger.info(f"Using config: {found}")
        return manager.load_from_file(found)

    logger.debug("Using default configuration")
    return manager.get_default_config()
