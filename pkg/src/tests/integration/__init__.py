"""Integration tests for the CLI and the built package."""
