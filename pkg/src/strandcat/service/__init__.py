"""FastAPI wrapper around the core constructions."""

from .app import app

__all__ = ["app"]
