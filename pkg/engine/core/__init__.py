"""Core engine components."""

