"""Tests for engine configuration."""

import tempfile
from pathlib import Path

import pytest

from engine.core.config import DEFAULT_CONFIG, EngineConfig
from engine.core.errors import ConfigError


def test_defaults():
    config = EngineConfig()
    assert config == DEFAULT_CONFIG
    assert config.enumeration_cap == 5
    assert config.bruteforce_cap == 4
    assert config.phase2_mode == "backtrack"
    assert config.emit == "json"
    assert not config.strict_separators


def test_invalid_values_are_rejected():
    with pytest.raises(ConfigError):
        EngineConfig(full_model_cap=0)
    with pytest.raises(ConfigError):
        EngineConfig(bruteforce_cap=True)
    with pytest.raises(ConfigError):
        EngineConfig(phase2_mode="random")
    with pytest.raises(ConfigError):
        EngineConfig(emit="xml")
    with pytest.raises(ConfigError):
        EngineConfig(strict_separators="yes")


def test_overrides_ignore_none():
    config = DEFAULT_CONFIG.with_overrides(phase2_mode="failfast", emit=None)
    assert config.phase2_mode == "failfast"
    assert config.emit == "json"
    assert DEFAULT_CONFIG.phase2_mode == "backtrack"
    with pytest.raises(ConfigError):
        DEFAULT_CONFIG.with_overrides(colour="blue")


def test_from_dict_sections():
    config = EngineConfig.from_dict({
        "version": "1.0.0",
        "oracle": {"enumeration_cap": 4},
        "construct": {"strict_separators": True},
        "cli": None,
    })
    assert config.enumeration_cap == 4
    assert config.strict_separators
    assert EngineConfig.from_dict(None) == DEFAULT_CONFIG

    with pytest.raises(ConfigError):
        EngineConfig.from_dict({"logging": {}})
    with pytest.raises(ConfigError):
        EngineConfig.from_dict({"oracle": {"depth": 2}})
    with pytest.raises(ConfigError):
        EngineConfig.from_dict({"oracle": [1, 2]})
    with pytest.raises(ConfigError):
        EngineConfig.from_dict(["oracle"])


def test_load_yaml():
    """Test loading from files, missing files and malformed YAML."""
    with tempfile.TemporaryDirectory() as tmpdir:
        path = Path(tmpdir) / "dagiso.config.yaml"
        path.write_text("dsep:\n  full_model_cap: 5\nconstruct:\n  phase2_mode: failfast\n", encoding="utf-8")
        config = EngineConfig.load(path)
        assert config.full_model_cap == 5
        assert config.phase2_mode == "failfast"

        assert EngineConfig.load(Path(tmpdir) / "missing.yaml") == DEFAULT_CONFIG
        assert EngineConfig.load(None) == DEFAULT_CONFIG

        path.write_text("oracle: [unclosed\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            EngineConfig.load(path)


def test_shipped_config_matches_defaults():
    shipped = Path(__file__).parent.parent / "dagiso.config.yaml"
    assert EngineConfig.load(shipped) == DEFAULT_CONFIG
