"""
Base settings classes and enums for the zig-zag service.

Settings are read from init kwargs, the environment, ``.env``, secrets and
finally ``config.yaml``. YAML keys are upper-cased to match the field names,
except for the nested sections listed in ``_keep_original_keys``.
"""

from enum import Enum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    YamlConfigSettingsSource,
)


class OutputFormat(str, Enum):
    """How command results are written to stdout."""

    HUMAN = "human"
    RECORDS = "records"


class Command(str, Enum):
    NERVE = "nerve"
    SATURATE = "saturate"
    COHOMOLOGY = "cohomology"
    CHASE = "chase"
    CERTIFY = "certify"
    CORPUS = "corpus"


class YamlConfigSettingsSourceWithAliases(YamlConfigSettingsSource):
    """YAML source that upper-cases keys, leaving the named sections' own keys intact."""

    def __init__(self, keep_original_keys: list[str] | None = None, *args: Any, **kwargs: Any) -> None:
        self.keep_original_keys = list(keep_original_keys or [])
        super().__init__(*args, **kwargs)

    def _transform_keys(self, obj: Any, depth: int = 0, max_depth: int = 2) -> Any:
        if depth >= max_depth or not isinstance(obj, dict):
            return obj
        result: dict[str, Any] = {}
        for key, value in obj.items():
            name = str(key)
            if isinstance(value, dict) and name in self.keep_original_keys:
                result[name] = self._transform_keys(value, depth + 1, max_depth)
            else:
                result[name.upper()] = self._transform_keys(value, depth + 1, max_depth)
        return result

    def _read_file(self, file_path: Path) -> dict[str, Any]:
        data = super()._read_file(file_path)
        return self._transform_keys(data) if isinstance(data, dict) else {}


class CustomBaseSettings(BaseSettings):
    _keep_original_keys: list[str] = PrivateAttr(default_factory=list[str])

    model_config = SettingsConfigDict(
        yaml_file="config.yaml",
        yaml_file_encoding="utf-8",
        case_sensitive=False,
        nested_model_default_partial_update=True,
        extra="ignore",
        env_prefix="",
        env_nested_delimiter="__",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        # YAML has the lowest priority
        return (
            init_settings,
            env_settings,
            dotenv_settings,
            file_secret_settings,
            YamlConfigSettingsSourceWithAliases(
                settings_cls=settings_cls,
                keep_original_keys=cls._keep_original_keys.get_default(),  # type: ignore[attr-defined]
            ),
        )


class CustomBaseModel(BaseModel):
    model_config = ConfigDict(
        validate_assignment=True,
        extra="ignore",
    )
