"""Tests for phantom rendering."""
