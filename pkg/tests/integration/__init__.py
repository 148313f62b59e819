"""Integration tests for DeltaBound."""
