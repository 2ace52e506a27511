"""Core settings for the Čech zig-zag CLI."""

from importlib.metadata import metadata, version

from app.services.zigzag.models.general_settings import ZigzagGeneralSettings


class Settings(ZigzagGeneralSettings):
    """Application settings."""

    # Project Settings
    PACKAGE_NAME: str = "cech-zigzag"
    PROJECT_NAME: str = "Cech Zigzag"

    @property
    def VERSION(self) -> str:
        return version(self.PACKAGE_NAME)

    @property
    def DESCRIPTION(self) -> str:
        return metadata(self.PACKAGE_NAME).get("Summary", "").strip()
