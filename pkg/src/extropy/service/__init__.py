"""HTTP service wrapping the core package.

Run with ``uvicorn extropy.service:app``.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
