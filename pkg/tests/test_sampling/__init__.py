"""Tests for sampling densities and masks."""
