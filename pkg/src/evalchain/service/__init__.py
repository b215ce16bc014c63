"""HTTP front end; see :mod:`evalchain.service.app`."""

from .app import app

__all__ = ["app"]
