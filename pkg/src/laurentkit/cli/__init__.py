"""Command-line interface and session-file format."""
from .main import main
from .session import Session, format_session, parse_session

__all__ = ["Session", "format_session", "main", "parse_session"]
