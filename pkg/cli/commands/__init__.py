"""CLI commands."""

