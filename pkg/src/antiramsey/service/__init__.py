"""HTTP service exposing every package operation; see app for the routes."""

from .app import app

__all__ = ["app"]
