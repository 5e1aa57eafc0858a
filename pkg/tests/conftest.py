"""Keeps the tests directory importable for shared helpers."""
