"""HTTP service exposing sessions, plus on-disk persistence."""

from editloop.service.app import create_app
from editloop.service.manager import SessionManager
from editloop.service.store import SessionStore

__all__ = ["create_app", "SessionManager", "SessionStore"]
