"""Tests for the domino wave library and CLI."""
