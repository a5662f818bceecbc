"""Tests for basis pursuit and RIP estimation."""
