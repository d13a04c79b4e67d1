"""Command-line surface and the file formats it owns."""

from .main import main

__all__ = ["main"]
