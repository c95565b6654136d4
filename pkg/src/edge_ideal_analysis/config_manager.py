"""Layered configuration: packaged defaults, config.yaml, .env, environment.

Environment variables are named after the upper-cased dotted path of the key
they replace, so ``bounds.polarized_ground`` is overridden by
``BOUNDS_POLARIZED_GROUND``. Values are cast to the type of the value they
replace; list values are read as comma separated integers.
"""

import copy
import logging
import os
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .linear_algebra import FieldChoice
from .models import Bounds

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_NAME = "config.yaml"
DEFAULTS_PATH = Path(__file__).parent / "config" / "defaults.yaml"
TRUE_STRINGS = ("true", "1", "t", "yes")


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _cast_like(current: Any, text: str) -> Any:
    """Casts an environment string to the type of ``current``.

    Raises:
        ValueError: If ``text`` does not parse as that type.
    """
    if current is None or isinstance(current, str):
        return text
    if isinstance(current, bool):
        return text.lower() in TRUE_STRINGS
    if isinstance(current, int):
        return int(text)
    if isinstance(current, float):
        return float(text)
    if isinstance(current, list):
        return [int(part) for part in text.split(",") if part.strip()]
    return text


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, "r", encoding="utf-8") as file_handle:
        return yaml.safe_load(file_handle) or {}


class ConfigManager:
    """Loads the application configuration and hands out typed views of it.

    Attributes:
        config: The merged configuration tree.
    """

    def __init__(
        self, config_path: str = DEFAULT_CONFIG_NAME, env_path: Optional[str] = ".env"
    ):
        """Loads every configuration layer.

        Args:
            config_path: YAML file layered over the packaged defaults. A missing
                file is only tolerated at the default path.
            env_path: A .env file loaded into the environment first; None skips it.

        Raises:
            FileNotFoundError: If an explicitly given config file does not exist.
        """
        self.config_path = Path(config_path)
        self.env_path = Path(env_path) if env_path else None
        self.config: Dict[str, Any] = {}
        self._load_config()

    def _load_config(self):
        if self.env_path and self.env_path.is_file():
            load_dotenv(dotenv_path=self.env_path)
            logger.info("Environment file %s loaded", self.env_path)

        defaults = self._get_default_config()
        if self.config_path.is_file():
            self.config = _merge(defaults, _read_yaml(self.config_path))
            logger.info("Configuration read from %s", self.config_path)
        elif self.config_path == Path(DEFAULT_CONFIG_NAME):
            logger.info("No %s here, running on packaged defaults", DEFAULT_CONFIG_NAME)
            self.config = defaults
        else:
            logger.error("Config file %s does not exist", self.config_path)
            raise FileNotFoundError(f"Configuration file not found: {self.config_path}")

        self._override_with_env_vars(self.config)

    def _get_default_config(self) -> Dict[str, Any]:
        """The packaged defaults, or an empty tree if they cannot be read."""
        try:
            return _read_yaml(DEFAULTS_PATH)
        except (FileNotFoundError, yaml.YAMLError) as exception:
            logger.error("Packaged defaults unreadable: %s", exception)
            return {}

    def _override_with_env_vars(self, section: Dict[str, Any], prefix: str = ""):
        """Replaces leaf values of ``section`` that have an environment variable."""
        for key, current in section.items():
            if isinstance(current, dict):
                self._override_with_env_vars(current, prefix=f"{prefix}{key}_")
                continue
            name = f"{prefix}{key}".upper()
            text = os.getenv(name)
            if text is None:
                continue
            try:
                section[key] = _cast_like(current, text)
            except ValueError:
                section[key] = text
                logger.warning(
                    "%s=%r does not match the type of %s%s; kept as a string",
                    name,
                    text,
                    prefix.replace("_", "."),
                    key,
                )
            else:
                logger.info("%s%s set from %s", prefix.replace("_", "."), key, name)

    def get(self, key: str, default: Any = None) -> Any:
        """Looks up a dotted key such as ``harness.seed``.

        Returns:
            The value, or ``default`` when any part of the path is missing.
        """
        node: Any = self.config
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def bounds(self) -> Bounds:
        """The enumeration bounds; keys missing from the configuration keep defaults."""
        section = self.get("bounds") or {}
        return Bounds(
            **{
                name: int(section[name])
                for name in (entry.name for entry in fields(Bounds))
                if name in section
            }
        )

    def field(self) -> FieldChoice:
        return FieldChoice.parse(self.get("oracle.field", "q"))

    def __getitem__(self, key: str) -> Any:
        return self.config[key]

    def __repr__(self) -> str:
        return f"ConfigManager(config_path='{self.config_path}')"
