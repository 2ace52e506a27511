"""
General settings model for the zig-zag service.

Aggregates the output, corpus and seed options with the nested chase and
check sections.
"""

from pathlib import Path

from pydantic import Field, PrivateAttr, field_validator

from . import CustomBaseSettings, OutputFormat
from .chase_settings import ChaseSettings, CheckSettings


class ZigzagGeneralSettings(CustomBaseSettings):
    """Main configuration model for the zig-zag service."""

    # Private
    _keep_original_keys: list[str] = PrivateAttr(default_factory=lambda: ["chase", "checks"])

    LOG_LEVEL: str = "INFO"

    # None selects the corpus bundled with the package
    CORPUS_DIR: Path | None = None

    @field_validator("CORPUS_DIR", mode="before")
    @classmethod
    def _expand_corpus_dir(cls, value: str | Path | None) -> Path | None:
        if value in (None, ""):
            return None
        return Path(value).expanduser()  # type: ignore[arg-type]

    OUTPUT_FORMAT: OutputFormat = OutputFormat.HUMAN
    SEED: int = 0

    # Chase limits (delegated)
    chase: ChaseSettings = Field(default_factory=ChaseSettings)

    # Acceptance checks (delegated)
    checks: CheckSettings = Field(default_factory=CheckSettings)

    @property
    def bundled_corpus(self) -> bool:
        return self.CORPUS_DIR is None
