"""Unit tests for the zig-zag service and the CLI plumbing."""
