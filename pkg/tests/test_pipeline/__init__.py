"""Tests for the reconstruction pipeline."""
