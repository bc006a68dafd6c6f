"""
Configuration System
====================
Capacity caps, tolerances and search defaults from mubplane.toml.

Resolution (highest to lowest): explicit path, ``MUBPLANE_CONFIG``,
``./mubplane.toml``, built-in defaults.
"""
from __future__ import annotations

import copy
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import toml

from mubplane.exceptions import UsageError

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "MUBPLANE_CONFIG"
CONFIG_FILENAME = "mubplane.toml"


class Config:
    """mubplane configuration manager."""

    DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
        "capacity": {
            "field_order_max": 2**20,
            "plane_order_max": 32,
            "mub_dimension_max": 32,
        },
        "tolerance": {
            "certify": 1e-9,
            "construct": 1e-12,
            "orthonormal": 1e-10,
        },
        # Mirrors SearchConfig; dimension and target_count come per run.
        "search": {
            "restarts": 20,
            "max_iterations": 5000,
            "initial_step": 1.0,
            "step_decay": 0.5,
            "convergence_threshold": 1e-10,
            "stall_threshold": 1e-12,
            "stall_window": 50,
            "seed": 20240601,
            "step_rule": "barzilai-borwein",
            "workers": 1,
        },
        "survey": {
            "search_cap": 7,
        },
    }

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize configuration.

        Args:
            config_path: Explicit path to a TOML file; must exist when given.
        """
        self.config_path = resolve_config_path(config_path)
        self._config = copy.deepcopy(self.DEFAULT_CONFIG)

        if config_path is not None and not Path(config_path).exists():
            raise UsageError(f"config file {config_path} does not exist")
        if self.config_path.exists():
            self.load()

    def load(self) -> None:
        """Load configuration from file."""
        try:
            user_config = toml.load(self.config_path)
        except (toml.TomlDecodeError, OSError) as e:
            raise UsageError(f"could not read {self.config_path}: {e}") from e
        self._merge_config(user_config)
        logger.debug("loaded configuration from %s", self.config_path)

    def _merge_config(self, user_config: Dict[str, Any]) -> None:
        """Deep merge user config with defaults."""
        for section, values in user_config.items():
            if section in self._config and isinstance(values, dict):
                self._config[section].update(values)
            else:
                self._config[section] = values

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation.

        Example:
            config.get("tolerance.certify")  # → 1e-9
        """
        value: Any = self._config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """
        Set configuration value using dot notation.

        Example:
            config.set("search.restarts", 8)
        """
        keys = key.split(".")
        target = self._config
        for k in keys[:-1]:
            target = target.setdefault(k, {})
        target[keys[-1]] = value

    def save(self, path: Optional[Path] = None) -> Path:
        """Write the effective configuration as TOML."""
        target = Path(path) if path is not None else self.config_path
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w") as f:
            toml.dump(self._config, f)
        return target

    def as_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config)

    def search_settings(self) -> Dict[str, Any]:
        """The ``search`` section, ready to splat into SearchConfig."""
        return dict(self._config.get("search", {}))


def resolve_config_path(explicit: Optional[Path] = None) -> Path:
    """Pick the config file by precedence; the result need not exist."""
    if explicit is not None:
        return Path(explicit)
    env_path = os.environ.get(CONFIG_ENV_VAR)
    if env_path:
        return Path(env_path)
    return Path.cwd() / CONFIG_FILENAME
