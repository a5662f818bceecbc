"""Tests for the directional filter bank."""
