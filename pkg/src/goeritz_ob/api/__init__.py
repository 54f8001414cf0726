"""FastAPI-based HTTP API for the Goeritz checks."""

from goeritz_ob.api.main import create_app

__all__ = ["create_app"]
