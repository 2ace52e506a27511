from os import getenv as os_getenv
from pathlib import Path


class EnvVar:
    """A possibly unset environment value, read before settings exist."""

    def __init__(self, value: str | None):
        self._value = value

    def __str__(self) -> str:
        return self._value or ""

    def __repr__(self) -> str:
        return f"EnvVar({self._value!r})"

    @property
    def value(self) -> str | None:
        return self._value

    def is_set(self) -> bool:
        """Blank values count as unset."""
        return bool(self._value and self._value.strip())

    def as_upper(self, default: str) -> str:
        """Log level style value, ``default`` when unset."""
        return self._value.strip().upper() if self._value and self.is_set() else default

    def as_path(self) -> Path | None:
        """User-expanded path, None when unset."""
        return Path(self._value.strip()).expanduser() if self._value and self.is_set() else None


def getenv(key: str, default: str | None = None) -> EnvVar:
    return EnvVar(os_getenv(key, default))
