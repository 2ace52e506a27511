from .main import app as cech_zigzag_cli

__all__ = ["cech_zigzag_cli"]
