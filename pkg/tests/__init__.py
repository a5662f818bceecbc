"""Tests for ARC Linear GitHub MCP."""
