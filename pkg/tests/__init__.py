"""DeltaBound test suite."""
