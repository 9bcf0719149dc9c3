"""Session registry with strict command ordering and named persistence.

Each session wraps one EditorSession behind a lock, so the REST worker
threads and the socket listener can share it. Commands carry a
client-chosen sequence number that must increase by exactly one; a stale
or skipped number is rejected without touching the session, which lets a
client that lost a response resend safely.
"""

from __future__ import annotations

import os
import re
import tempfile
import threading
import uuid
from pathlib import Path

from ..core import Circuit, truth_table
from ..netlist import display_names, parse, serialize
from ..session import Command, EditorSession, Event

_SAVE_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")


class UnknownSession(Exception):
    def __init__(self, session_id: str):
        super().__init__(f"no such session: {session_id}")
        self.session_id = session_id


class OutOfOrder(Exception):
    """Sequence number other than last + 1."""

    def __init__(self, expected: int, got: int):
        super().__init__(f"expected seq {expected}, got {got}")
        self.expected = expected
        self.got = got


class UnknownName(Exception):
    def __init__(self, name: str):
        super().__init__(f"no saved circuit named {name!r}")
        self.name = name


class BadName(Exception):
    def __init__(self, name: str):
        super().__init__(
            f"invalid circuit name {name!r} (letters, digits, _ and - only)"
        )
        self.name = name


class _Handle:
    __slots__ = ("session", "last_seq", "lock")

    def __init__(self) -> None:
        self.session = EditorSession()
        self.last_seq = 0
        self.lock = threading.Lock()


class SessionManager:
    def __init__(self, data_dir: Path, table_cap: int):
        self.data_dir = Path(data_dir)
        self.table_cap = table_cap
        self._handles: dict[str, _Handle] = {}
        self._registry = threading.Lock()

    def _handle(self, session_id: str) -> _Handle:
        with self._registry:
            try:
                return self._handles[session_id]
            except KeyError:
                raise UnknownSession(session_id) from None

    # -- lifecycle ---------------------------------------------------

    def create_session(self) -> tuple[str, dict]:
        session_id = uuid.uuid4().hex
        handle = _Handle()
        with self._registry:
            self._handles[session_id] = handle
        return session_id, handle.session.snapshot()

    def close_session(self, session_id: str) -> None:
        with self._registry:
            if self._handles.pop(session_id, None) is None:
                raise UnknownSession(session_id)

    # -- commands and state ------------------------------------------

    def dispatch(self, session_id: str, seq: int, command: Command) -> tuple[Event, dict]:
        """Apply one command. Every accepted seq advances the counter,
        including commands the editor answers with a Rejected event."""
        handle = self._handle(session_id)
        with handle.lock:
            if seq != handle.last_seq + 1:
                raise OutOfOrder(handle.last_seq + 1, seq)
            event = handle.session.apply(command)
            handle.last_seq = seq
            return event, handle.session.snapshot()

    def state(self, session_id: str) -> tuple[int, dict]:
        handle = self._handle(session_id)
        with handle.lock:
            return handle.last_seq, handle.session.snapshot()

    # -- whole-circuit exchange ----------------------------------------

    def circuit_text(self, session_id: str) -> str:
        handle = self._handle(session_id)
        with handle.lock:
            return serialize(handle.session.circuit)

    def load_text(self, session_id: str, text: str) -> tuple[Event, dict]:
        circuit = parse(text)  # ParseError propagates to the caller
        handle = self._handle(session_id)
        with handle.lock:
            event = handle.session.load(circuit)
            return event, handle.session.snapshot()

    def table(self, session_id: str) -> dict:
        handle = self._handle(session_id)
        with handle.lock:
            circuit = handle.session.circuit
            result = truth_table(circuit, cap=self.table_cap)
            names = display_names(circuit)
        return {
            "inputs": [{"element": i, "name": names[i]} for i in result.inputs],
            "outputs": [{"element": o, "name": names[o]} for o in result.outputs],
            "rows": [
                {
                    "inputs": list(row.inputs),
                    "outputs": [level.symbol for level in row.outputs],
                }
                for row in result.rows
            ],
        }

    # -- named persistence -------------------------------------------

    def _path_for(self, name: str) -> Path:
        if not _SAVE_NAME.match(name):
            raise BadName(name)
        return self.data_dir / f"{name}.lgc"

    def save_named(self, session_id: str, name: str) -> Path:
        path = self._path_for(name)
        text = self.circuit_text(session_id)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.data_dir, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path

    def load_named(self, session_id: str, name: str) -> tuple[Event, dict]:
        path = self._path_for(name)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise UnknownName(name) from None
        return self.load_text(session_id, text)

    def list_named(self) -> list[str]:
        if not self.data_dir.is_dir():
            return []
        return sorted(p.stem for p in self.data_dir.glob("*.lgc"))
