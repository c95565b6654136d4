"""Tests for the Configuration Manager."""

import os
import tempfile
import unittest
from dataclasses import fields
from pathlib import Path
from unittest.mock import patch

import yaml

from edge_ideal_analysis.config_manager import DEFAULTS_PATH, ConfigManager
from edge_ideal_analysis.linear_algebra import FieldChoice
from edge_ideal_analysis.models import Bounds


class TestConfigManager(unittest.TestCase):
    """Test suite for the ConfigManager."""

    def setUp(self):
        """Set up temporary config files for tests."""
        self.directory = tempfile.TemporaryDirectory()
        self.test_yaml_path = Path(self.directory.name) / "test_config.yaml"
        self.test_env_path = Path(self.directory.name) / ".test.env"
        self.test_yaml_path.write_text(
            """
bounds:
  subset_enumeration: 12
oracle:
  field: q
harness:
  seed: 7
""",
            encoding="utf-8",
        )
        self.test_env_path.write_text(
            "BOUNDS_POLARIZED_GROUND=18\nORACLE_FIELD=p:3\n", encoding="utf-8"
        )

    def tearDown(self):
        """Clean up temporary files."""
        self.directory.cleanup()

    def test_load_from_yaml(self):
        """Test loading configuration from a YAML file over the packaged defaults."""
        cm = ConfigManager(config_path=str(self.test_yaml_path), env_path=None)
        self.assertEqual(cm.get("bounds.subset_enumeration"), 12)
        self.assertEqual(cm.get("harness.seed"), 7)
        self.assertEqual(cm.get("harness.weights"), [1, 2])
        self.assertEqual(cm["oracle"], {"field": "q"})

    @patch.dict(os.environ, {})
    def test_override_with_env_file(self):
        """Test that .env file values override YAML values."""
        cm = ConfigManager(
            config_path=str(self.test_yaml_path), env_path=str(self.test_env_path)
        )
        self.assertEqual(cm.bounds().polarized_ground, 18)
        self.assertEqual(cm.field(), FieldChoice(3))

    @patch.dict(
        os.environ,
        {"HARNESS_WEIGHTS": "1,2,3", "HARNESS_SHOW_PROGRESS": "false"},
    )
    def test_override_with_os_env(self):
        """Test that OS environment variables are cast to the configured types."""
        cm = ConfigManager(config_path=str(self.test_yaml_path), env_path=None)
        self.assertEqual(cm.get("harness.weights"), [1, 2, 3])
        self.assertIs(cm.get("harness.show_progress"), False)

    @patch.dict(os.environ, {"BOUNDS_SUBSET_ENUMERATION": "lots"})
    def test_uncastable_env_value(self):
        """Test that an uncastable value is kept as a string with a warning."""
        with self.assertLogs("edge_ideal_analysis.config_manager", level="WARNING"):
            cm = ConfigManager(config_path=str(self.test_yaml_path), env_path=None)
        self.assertEqual(cm.get("bounds.subset_enumeration"), "lots")

    def test_bounds(self):
        """Test that bounds combine the file with the packaged defaults."""
        cm = ConfigManager(config_path=str(self.test_yaml_path), env_path=None)
        self.assertEqual(
            cm.bounds(),
            Bounds(
                subset_enumeration=12,
                decomposability=16,
                polarized_ground=24,
                homology_faces=200000,
            ),
        )
        self.assertEqual(cm.field(), FieldChoice())

    def test_packaged_defaults_cover_every_bound(self):
        """Test that the packaged defaults file names every bound."""
        defaults = yaml.safe_load(DEFAULTS_PATH.read_text(encoding="utf-8"))
        self.assertEqual(set(defaults["bounds"]), {f.name for f in fields(Bounds)})
        self.assertEqual(defaults["oracle"], {"field": "q"})

    @patch(
        "edge_ideal_analysis.config_manager.DEFAULTS_PATH",
        Path("/nonexistent/defaults.yaml"),
    )
    def test_unreadable_packaged_defaults(self):
        """Test that missing packaged defaults leave only the file values."""
        with self.assertLogs("edge_ideal_analysis.config_manager", level="ERROR"):
            cm = ConfigManager(config_path=str(self.test_yaml_path), env_path=None)
        self.assertIsNone(cm.get("harness.weights"))
        self.assertEqual(cm.bounds(), Bounds(subset_enumeration=12))

    def test_get_with_default_value(self):
        """Test the get method with a default value for a missing key."""
        cm = ConfigManager(config_path=str(self.test_yaml_path), env_path=None)
        self.assertEqual(cm.get("bounds.nonexistent_key", "default"), "default")
        with self.assertRaises(KeyError):
            cm["nonexistent"]

    def test_missing_file(self):
        """Test that a missing non-default path raises FileNotFoundError."""
        with self.assertRaises(FileNotFoundError):
            ConfigManager(
                config_path=str(Path(self.directory.name) / "absent.yaml"),
                env_path=None,
            )


if __name__ == "__main__":
    unittest.main()
