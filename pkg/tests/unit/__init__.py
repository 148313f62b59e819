"""Unit tests for DeltaBound."""
