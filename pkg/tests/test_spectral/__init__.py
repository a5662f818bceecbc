"""Tests for spectral primitives."""
