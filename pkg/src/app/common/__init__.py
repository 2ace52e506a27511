from .getenv import getenv

__all__ = ["getenv"]
