"""End-to-end tests over the larger corpus entries."""
