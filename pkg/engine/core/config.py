"""Immutable engine configuration."""

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from engine.core.errors import ConfigError

PHASE2_MODES = ("backtrack", "failfast")
EMIT_FORMATS = ("json", "dot", "text")

# YAML section -> config fields it may set
_SECTIONS: Dict[str, tuple] = {
    "model": ("closure_universe_cap",),
    "dsep": ("full_model_cap",),
    "oracle": ("enumeration_cap", "bruteforce_cap"),
    "construct": ("phase2_mode", "strict_separators"),
    "cli": ("emit",),
}


@dataclass(frozen=True)
class EngineConfig:
    """
    Immutable engine configuration.

    Caps bound the exponential parts of the engine: closure materialization,
    full-model extraction and oracle enumeration.
    """
    closure_universe_cap: int = 10
    full_model_cap: int = 6
    enumeration_cap: int = 5
    bruteforce_cap: int = 4
    phase2_mode: str = "backtrack"
    strict_separators: bool = False
    emit: str = "json"

    def __post_init__(self) -> None:
        for name in ("closure_universe_cap", "full_model_cap", "enumeration_cap", "bruteforce_cap"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.phase2_mode not in PHASE2_MODES:
            raise ConfigError(f"phase2_mode must be one of {PHASE2_MODES}, got {self.phase2_mode!r}")
        if self.emit not in EMIT_FORMATS:
            raise ConfigError(f"emit must be one of {EMIT_FORMATS}, got {self.emit!r}")
        if not isinstance(self.strict_separators, bool):
            raise ConfigError("strict_separators must be a boolean")

    def with_overrides(self, **kwargs: Any) -> "EngineConfig":
        """Create new config with the given fields replaced; None values are ignored."""
        known = {f.name for f in fields(self)}
        unknown = set(kwargs) - known
        if unknown:
            raise ConfigError(f"Unknown config fields: {sorted(unknown)}")
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "EngineConfig":
        """Build config from the sectioned mapping used in the YAML file."""
        if not data:
            return cls()
        if not isinstance(data, dict):
            raise ConfigError("Config root must be a mapping")

        values: Dict[str, Any] = {}
        for section, body in data.items():
            if section == "version":
                continue
            if section not in _SECTIONS:
                raise ConfigError(f"Unknown config section: {section}")
            if body is None:
                continue
            if not isinstance(body, dict):
                raise ConfigError(f"Config section {section} must be a mapping")
            for key, value in body.items():
                if key not in _SECTIONS[section]:
                    raise ConfigError(f"Unknown key {section}.{key}")
                values[key] = value
        return cls(**values)

    @classmethod
    def load(cls, path: Optional[Union[str, Path]] = None) -> "EngineConfig":
        """
        Load configuration from YAML.

        A missing file yields the defaults.

        Raises:
            ConfigError: If the file is not valid YAML or has unknown keys
        """
        if path is None:
            return cls()
        config_path = Path(path)
        if not config_path.exists():
            return cls()
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigError(f"Invalid config file {config_path}: {e}") from e
        return cls.from_dict(data)


DEFAULT_CONFIG = EngineConfig()
