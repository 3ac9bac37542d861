"""Utility modules for the dagiso engine."""
