"""Application dependencies shared by the CLI commands."""

from functools import lru_cache

from app.core.settings import Settings
from app.services.zigzag import ZigzagWorkbench


@lru_cache()
def get_settings() -> Settings:
    """Returns a cached instance of the application settings."""
    return Settings()


def get_workbench(settings: Settings | None = None) -> ZigzagWorkbench:
    """A workbench over ``settings``, the cached settings by default."""
    return ZigzagWorkbench(settings or get_settings())
