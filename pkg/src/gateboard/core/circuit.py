"""The editable netlist: elements, pins and directed connections.

A Circuit is a plain mutable value with no interior sharing.  Element ids
are assigned monotonically and never reused, even across deletions and
``clear()``, so stale references can always be detected.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, replace

from .errors import (
    BadPin,
    DuplicateConnection,
    InputAlreadyDriven,
    NotASwitch,
    UnknownConnection,
    UnknownElement,
)
from .levels import GateKind, LogicLevel


class PinDirection(enum.Enum):
    IN = "in"
    OUT = "out"


@dataclass(frozen=True)
class PinRef:
    """One pin of one element: (element id, direction, pin index)."""

    element: int
    direction: PinDirection
    index: int

    def __str__(self) -> str:
        return f"{self.element}.{self.direction.value}{self.index}"


def in_pin(element: int, index: int = 0) -> PinRef:
    return PinRef(element, PinDirection.IN, index)


def out_pin(element: int, index: int = 0) -> PinRef:
    return PinRef(element, PinDirection.OUT, index)


_PIN_NAME = re.compile(r"^(in|out)([0-9]+)?$")


def parse_pin_name(name: str) -> tuple[PinDirection, int] | None:
    """Parse a textual pin name (``out``, ``out0``, ``in``, ``in1``, ...).

    Returns None if the name is not pin-shaped.  Bare ``in``/``out`` mean
    index 0.
    """
    m = _PIN_NAME.match(name)
    if m is None:
        return None
    direction = PinDirection.IN if m.group(1) == "in" else PinDirection.OUT
    return direction, int(m.group(2) or 0)


class InputKind(enum.Enum):
    CONST0 = "const0"
    CONST1 = "const1"
    SWITCH = "switch"


class OutputKind(enum.Enum):
    LAMP = "lamp"
    LED = "led"


@dataclass(frozen=True)
class Gate:
    kind: GateKind

    @property
    def n_inputs(self) -> int:
        return self.kind.arity

    n_outputs = 1


@dataclass(frozen=True)
class LogicInput:
    """A signal source: constant 0, constant 1, or a toggleable switch."""

    kind: InputKind

    n_inputs = 0
    n_outputs = 1


@dataclass(frozen=True)
class Indicator:
    """An output element (lamp or LED), lit when its input is HIGH."""

    kind: OutputKind

    n_inputs = 1
    n_outputs = 0


ElementKind = Gate | LogicInput | Indicator


@dataclass
class Element:
    """A placed circuit node.  ``kind`` is immutable; position and switch
    state are free to change."""

    id: int
    kind: ElementKind
    position: tuple[float, float] = (0.0, 0.0)
    name: str | None = None
    switch_on: bool = False

    @property
    def is_switch(self) -> bool:
        return isinstance(self.kind, LogicInput) and self.kind.kind is InputKind.SWITCH

    def source_level(self) -> LogicLevel:
        """The level this element emits.  Only valid for logic inputs."""
        assert isinstance(self.kind, LogicInput)
        if self.kind.kind is InputKind.CONST0:
            return LogicLevel.LOW
        if self.kind.kind is InputKind.CONST1:
            return LogicLevel.HIGH
        return LogicLevel.from_bool(self.switch_on)


@dataclass(frozen=True)
class Connection:
    """A directed wire from an output pin to an input pin."""

    source: PinRef
    target: PinRef


class Circuit:
    """Elements plus connections; everything the evaluator needs."""

    def __init__(self) -> None:
        self._elements: dict[int, Element] = {}
        # Single-driver rule is structural: the map is keyed by input pin.
        self._drivers: dict[PinRef, PinRef] = {}
        self._next_id = 1

    # ------------------------------------------------------------------
    # inspection

    def __len__(self) -> int:
        return len(self._elements)

    def __contains__(self, element_id: int) -> bool:
        return element_id in self._elements

    def element(self, element_id: int) -> Element:
        try:
            return self._elements[element_id]
        except KeyError:
            raise UnknownElement(f"no element with id {element_id}") from None

    def elements(self) -> list[Element]:
        """All elements, ascending by id."""
        return [self._elements[i] for i in sorted(self._elements)]

    def connections(self) -> list[Connection]:
        """All connections, sorted by (target element, target pin index)."""
        return [
            Connection(self._drivers[t], t)
            for t in sorted(self._drivers, key=lambda p: (p.element, p.index))
        ]

    def driver_of(self, pin: PinRef) -> PinRef | None:
        return self._drivers.get(pin)

    def fan_out(self, pin: PinRef) -> list[PinRef]:
        """Input pins driven by ``pin``, sorted."""
        return sorted(
            (t for t, s in self._drivers.items() if s == pin),
            key=lambda p: (p.element, p.index),
        )

    def switches(self) -> list[Element]:
        return [e for e in self.elements() if e.is_switch]

    def indicators(self) -> list[Element]:
        return [e for e in self.elements() if isinstance(e.kind, Indicator)]

    def check_pin(self, pin: PinRef) -> None:
        """Raise UnknownElement/BadPin unless ``pin`` exists on a live element."""
        el = self.element(pin.element)
        count = el.kind.n_inputs if pin.direction is PinDirection.IN else el.kind.n_outputs
        if not 0 <= pin.index < count:
            raise BadPin(f"element {pin.element} has no pin {pin.direction.value}{pin.index}")

    # ------------------------------------------------------------------
    # mutation

    def add_element(
        self,
        kind: ElementKind,
        position: tuple[float, float] = (0.0, 0.0),
        name: str | None = None,
    ) -> int:
        """Insert a new element and return its fresh id."""
        element_id = self._next_id
        self._next_id += 1
        self._elements[element_id] = Element(element_id, kind, position, name)
        return element_id

    def remove_element(self, element_id: int) -> None:
        """Delete an element and every connection touching any of its pins."""
        self.element(element_id)
        del self._elements[element_id]
        self._drivers = {
            t: s
            for t, s in self._drivers.items()
            if t.element != element_id and s.element != element_id
        }

    def move_element(self, element_id: int, position: tuple[float, float]) -> None:
        self.element(element_id).position = position

    def connect(self, source: PinRef, target: PinRef) -> Connection:
        """Wire an output pin to an input pin (output-first, one driver per input)."""
        self.element(source.element)
        self.element(target.element)
        if source.direction is not PinDirection.OUT:
            raise BadPin(f"connection source {source} is not an output pin")
        if target.direction is not PinDirection.IN:
            raise BadPin(f"connection target {target} is not an input pin")
        self.check_pin(source)
        self.check_pin(target)
        existing = self._drivers.get(target)
        if existing == source:
            raise DuplicateConnection(f"{source} -> {target} already exists")
        if existing is not None:
            raise InputAlreadyDriven(f"{target} is already driven by {existing}")
        self._drivers[target] = source
        return Connection(source, target)

    def disconnect(self, source: PinRef, target: PinRef) -> None:
        if self._drivers.get(target) != source:
            raise UnknownConnection(f"no connection {source} -> {target}")
        del self._drivers[target]

    def clear(self) -> None:
        """Remove everything.  The id counter is kept, so ids stay fresh."""
        self._elements.clear()
        self._drivers.clear()

    def toggle_switch(self, element_id: int) -> LogicLevel:
        """Flip a switch and return the level it now emits."""
        el = self.element(element_id)
        if not el.is_switch:
            raise NotASwitch(f"element {element_id} is not a switch")
        el.switch_on = not el.switch_on
        return el.source_level()

    def set_switch(self, element_id: int, on: bool) -> None:
        el = self.element(element_id)
        if not el.is_switch:
            raise NotASwitch(f"element {element_id} is not a switch")
        el.switch_on = on

    def clone(self) -> "Circuit":
        """Independent deep copy; safe to hand to another thread."""
        other = Circuit()
        other._elements = {i: replace(e) for i, e in self._elements.items()}
        other._drivers = dict(self._drivers)
        other._next_id = self._next_id
        return other
