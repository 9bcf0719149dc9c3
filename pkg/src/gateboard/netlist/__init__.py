"""The textual ``.lgc`` circuit format and the protocol state export."""

from .parser import (
    Declaration,
    NetlistDocument,
    ParseError,
    ParseErrorKind,
    PinEndpoint,
    Wire,
    build_circuit,
    parse,
    parse_document,
)
from .state import export_state
from .writer import display_names, serialize

__all__ = [
    "Declaration",
    "NetlistDocument",
    "ParseError",
    "ParseErrorKind",
    "PinEndpoint",
    "Wire",
    "build_circuit",
    "display_names",
    "export_state",
    "parse",
    "parse_document",
    "serialize",
]
