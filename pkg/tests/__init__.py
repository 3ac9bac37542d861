"""Tests for dagiso."""
