"""Parser for the line-oriented ``.lgc`` circuit format.

One statement per line, ``#`` starts a comment, names must be declared
before a wire uses them:

    input  <name> <const0|const1|switch[:on|off]> [@ (x,y)]
    gate   <name> <and|or|not|nand|nor|xor|xnor|buf> [@ (x,y)]
    output <name> <lamp|led> [@ (x,y)]
    wire   <name>.<out|out0> -> <name>.<in0|in1|in>

Parsing is a single pass so the first error in document order always
wins; every error carries the (line, column) of the offending token.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from ..core import (
    Circuit,
    ElementKind,
    Gate,
    GateKind,
    Indicator,
    InputKind,
    LogicInput,
    OutputKind,
    PinDirection,
    PinRef,
    parse_pin_name,
)


class ParseErrorKind(enum.Enum):
    SYNTAX = "syntax"
    UNKNOWN_KIND = "unknown_kind"
    DUPLICATE_NAME = "duplicate_name"
    UNKNOWN_NAME = "unknown_name"
    BAD_PIN = "bad_pin"
    INPUT_ALREADY_DRIVEN = "input_already_driven"


class ParseError(Exception):
    def __init__(self, line: int, column: int, kind: ParseErrorKind, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.kind = kind
        self.message = message


@dataclass(frozen=True)
class Declaration:
    name: str
    kind: ElementKind
    switch_on: bool
    position: tuple[float, float]
    line: int
    column: int


@dataclass(frozen=True)
class PinEndpoint:
    name: str
    direction: PinDirection
    index: int
    line: int
    column: int


@dataclass(frozen=True)
class Wire:
    source: PinEndpoint
    target: PinEndpoint


@dataclass(frozen=True)
class NetlistDocument:
    declarations: tuple[Declaration, ...]
    wires: tuple[Wire, ...]


_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_NUMBER = re.compile(r"^[-+]?(\d+(\.\d*)?|\.\d+)([eE][-+]?\d+)?$")
# A '-' belongs to a word token (negative numbers) unless it starts '->'.
_TOKEN = re.compile(r"->|[@(),]|(?:[A-Za-z0-9_.:+]|-(?!>))+")

_GATE_KEYWORDS = {k.value: k for k in GateKind}
_OUTPUT_KEYWORDS = {k.value: k for k in OutputKind}
_INPUT_KEYWORDS = {
    "const0": (InputKind.CONST0, False),
    "const1": (InputKind.CONST1, False),
    "switch": (InputKind.SWITCH, False),
    "switch:off": (InputKind.SWITCH, False),
    "switch:on": (InputKind.SWITCH, True),
}


@dataclass(frozen=True)
class _Token:
    text: str
    column: int


def _tokenize(line: str, line_no: int) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(line):
        if line[pos] in " \t":
            pos += 1
            continue
        if line[pos] == "#":
            break
        m = _TOKEN.match(line, pos)
        if m is None:
            raise ParseError(
                line_no, pos + 1, ParseErrorKind.SYNTAX,
                f"unexpected character {line[pos]!r}",
            )
        tokens.append(_Token(m.group(), pos + 1))
        pos = m.end()
    return tokens


class _Cursor:
    """Walks one statement's token list with located error reporting."""

    def __init__(self, tokens: list[_Token], line_no: int):
        self.tokens = tokens
        self.line = line_no
        self.pos = 0

    @property
    def _end_column(self) -> int:
        last = self.tokens[-1]
        return last.column + len(last.text)

    def error(self, kind: ParseErrorKind, message: str, column: int | None = None):
        if column is None:
            column = (
                self.tokens[self.pos].column
                if self.pos < len(self.tokens)
                else self._end_column
            )
        raise ParseError(self.line, column, kind, message)

    def take(self, what: str) -> _Token:
        if self.pos >= len(self.tokens):
            self.error(ParseErrorKind.SYNTAX, f"expected {what}")
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, literal: str) -> _Token:
        token = self.take(f"'{literal}'")
        if token.text != literal:
            self.error(
                ParseErrorKind.SYNTAX,
                f"expected '{literal}', found '{token.text}'",
                token.column,
            )
        return token

    def done(self) -> bool:
        return self.pos >= len(self.tokens)


def _parse_name(cursor: _Cursor) -> _Token:
    token = cursor.take("an element name")
    if not _NAME.match(token.text):
        cursor.error(
            ParseErrorKind.SYNTAX, f"invalid element name '{token.text}'", token.column
        )
    return token


def _parse_number(cursor: _Cursor) -> float:
    token = cursor.take("a number")
    if not _NUMBER.match(token.text):
        cursor.error(
            ParseErrorKind.SYNTAX, f"expected a number, found '{token.text}'", token.column
        )
    return float(token.text)


def _parse_position(cursor: _Cursor) -> tuple[float, float]:
    if cursor.done():
        return (0.0, 0.0)
    cursor.expect("@")
    cursor.expect("(")
    x = _parse_number(cursor)
    cursor.expect(",")
    y = _parse_number(cursor)
    cursor.expect(")")
    return (x, y)


def _parse_endpoint(cursor: _Cursor) -> PinEndpoint:
    token = cursor.take("a pin reference like name.in0")
    name, dot, pin_name = token.text.partition(".")
    if not dot or not _NAME.match(name):
        cursor.error(
            ParseErrorKind.SYNTAX,
            f"expected a pin reference like name.in0, found '{token.text}'",
            token.column,
        )
    pin_column = token.column + len(name) + 1
    parsed = parse_pin_name(pin_name)
    if parsed is None:
        cursor.error(
            ParseErrorKind.BAD_PIN, f"unknown pin name '{pin_name}'", pin_column
        )
    direction, index = parsed
    return PinEndpoint(name, direction, index, cursor.line, pin_column)


def parse_document(text: str) -> NetlistDocument:
    """Parse and fully validate ``.lgc`` source into a NetlistDocument."""
    declarations: list[Declaration] = []
    wires: list[Wire] = []
    by_name: dict[str, Declaration] = {}
    driven: dict[tuple[str, int], Wire] = {}

    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(line, line_no)
        if not tokens:
            continue
        cursor = _Cursor(tokens, line_no)
        head = cursor.take("a statement")

        if head.text == "wire":
            source = _parse_endpoint(cursor)
            cursor.expect("->")
            target = _parse_endpoint(cursor)
            wire = Wire(source, target)
            _check_wire(wire, by_name, driven)
            driven[(target.name, target.index)] = wire
            wires.append(wire)
        elif head.text in ("input", "gate", "output"):
            name = _parse_name(cursor)
            kind_token = cursor.take("a kind keyword")
            kind, switch_on = _parse_kind(head.text, kind_token, cursor)
            position = _parse_position(cursor)
            if name.text in by_name:
                cursor.error(
                    ParseErrorKind.DUPLICATE_NAME,
                    f"element '{name.text}' is already declared",
                    name.column,
                )
            decl = Declaration(
                name.text, kind, switch_on, position, line_no, head.column
            )
            by_name[name.text] = decl
            declarations.append(decl)
        else:
            cursor.error(
                ParseErrorKind.SYNTAX,
                f"expected 'input', 'gate', 'output' or 'wire', found '{head.text}'",
                head.column,
            )
        if not cursor.done():
            extra = cursor.tokens[cursor.pos]
            cursor.error(
                ParseErrorKind.SYNTAX,
                f"unexpected trailing '{extra.text}'",
                extra.column,
            )

    return NetlistDocument(tuple(declarations), tuple(wires))


def _parse_kind(
    statement: str, token: _Token, cursor: _Cursor
) -> tuple[ElementKind, bool]:
    if statement == "gate":
        gate = _GATE_KEYWORDS.get(token.text)
        if gate is None:
            cursor.error(
                ParseErrorKind.UNKNOWN_KIND,
                f"unknown gate kind '{token.text}'",
                token.column,
            )
        return Gate(gate), False
    if statement == "input":
        entry = _INPUT_KEYWORDS.get(token.text)
        if entry is None:
            cursor.error(
                ParseErrorKind.UNKNOWN_KIND,
                f"unknown input kind '{token.text}'",
                token.column,
            )
        kind, on = entry
        return LogicInput(kind), on
    output = _OUTPUT_KEYWORDS.get(token.text)
    if output is None:
        cursor.error(
            ParseErrorKind.UNKNOWN_KIND,
            f"unknown output kind '{token.text}'",
            token.column,
        )
    return Indicator(output), False


def _endpoint_error(endpoint: PinEndpoint, kind: ParseErrorKind, message: str):
    raise ParseError(endpoint.line, endpoint.column, kind, message)


def _check_wire(
    wire: Wire, by_name: dict[str, Declaration], driven: dict[tuple[str, int], Wire]
) -> None:
    for endpoint, wanted in ((wire.source, PinDirection.OUT), (wire.target, PinDirection.IN)):
        decl = by_name.get(endpoint.name)
        if decl is None:
            _endpoint_error(
                endpoint,
                ParseErrorKind.UNKNOWN_NAME,
                f"unknown element '{endpoint.name}' (declare before use)",
            )
        if endpoint.direction is not wanted:
            side = "source" if wanted is PinDirection.OUT else "target"
            _endpoint_error(
                endpoint,
                ParseErrorKind.BAD_PIN,
                f"wire {side} must be an {wanted.value} pin",
            )
        count = decl.kind.n_outputs if wanted is PinDirection.OUT else decl.kind.n_inputs
        if endpoint.index >= count:
            _endpoint_error(
                endpoint,
                ParseErrorKind.BAD_PIN,
                f"'{endpoint.name}' has no pin "
                f"{endpoint.direction.value}{endpoint.index}",
            )
    key = (wire.target.name, wire.target.index)
    if key in driven:
        previous = driven[key].source
        same = (previous.name, previous.index) == (wire.source.name, wire.source.index)
        message = (
            "duplicate wire"
            if same
            else f"input already driven from {previous.name}"
        )
        _endpoint_error(wire.target, ParseErrorKind.INPUT_ALREADY_DRIVEN, message)


def build_circuit(document: NetlistDocument) -> Circuit:
    """Materialize a validated document; declaration order fixes id order."""
    circuit = Circuit()
    ids: dict[str, int] = {}
    for decl in document.declarations:
        element_id = circuit.add_element(decl.kind, decl.position, decl.name)
        ids[decl.name] = element_id
        if decl.switch_on:
            circuit.set_switch(element_id, True)
    for wire in document.wires:
        circuit.connect(
            PinRef(ids[wire.source.name], wire.source.direction, wire.source.index),
            PinRef(ids[wire.target.name], wire.target.direction, wire.target.index),
        )
    return circuit


def parse(text: str) -> Circuit:
    """Parse ``.lgc`` source into a Circuit, raising ParseError on bad input."""
    return build_circuit(parse_document(text))
