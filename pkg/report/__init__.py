"""Sealed JSON decision records."""
