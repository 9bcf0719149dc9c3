"""Command-driven editor sessions, independent of any rendering."""

from . import commands
from .commands import Command, EditorMode, Event, Viewport
from .editor import EditorSession

__all__ = ["Command", "EditorMode", "EditorSession", "Event", "Viewport", "commands"]
