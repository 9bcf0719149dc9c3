"""Editor commands and the events they produce.

Every command yields exactly one event; interactions that cannot apply
(wrong pin, missing element, bad numbers) come back as ``Rejected`` with
a human-readable reason instead of raising, so a touch UI can simply
show the reason and carry on.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..core import GateKind, InputKind, LogicLevel, OutputKind, PinRef

Position = tuple[float, float]


class EditorMode(enum.Enum):
    NORMAL = "normal"
    DELETE_ACTIVE = "delete_active"


@dataclass(frozen=True)
class Viewport:
    zoom: float = 1.0
    pan: tuple[float, float] = (0.0, 0.0)


ZOOM_MIN = 0.25
ZOOM_MAX = 4.0


# --- commands ---------------------------------------------------------


@dataclass(frozen=True)
class AddGate:
    kind: GateKind
    position: Position = (0.0, 0.0)


@dataclass(frozen=True)
class AddInput:
    kind: InputKind
    position: Position = (0.0, 0.0)


@dataclass(frozen=True)
class AddOutput:
    kind: OutputKind
    position: Position = (0.0, 0.0)


@dataclass(frozen=True)
class TapPin:
    pin: PinRef


@dataclass(frozen=True)
class TapElement:
    element: int


@dataclass(frozen=True)
class MoveElement:
    element: int
    position: Position


@dataclass(frozen=True)
class ToggleDeleteMode:
    pass


@dataclass(frozen=True)
class Clean:
    pass


@dataclass(frozen=True)
class SetViewport:
    zoom: float
    pan: tuple[float, float]


@dataclass(frozen=True)
class ResetViewport:
    pass


@dataclass(frozen=True)
class NewCircuit:
    pass


Command = (
    AddGate
    | AddInput
    | AddOutput
    | TapPin
    | TapElement
    | MoveElement
    | ToggleDeleteMode
    | Clean
    | SetViewport
    | ResetViewport
    | NewCircuit
)


# --- events -----------------------------------------------------------


@dataclass(frozen=True)
class ElementAdded:
    element: int


@dataclass(frozen=True)
class ElementDeleted:
    element: int


@dataclass(frozen=True)
class ConnectionMade:
    source: PinRef
    target: PinRef


@dataclass(frozen=True)
class SwitchToggled:
    element: int
    level: LogicLevel


@dataclass(frozen=True)
class ModeChanged:
    mode: EditorMode


@dataclass(frozen=True)
class Cleaned:
    pass


@dataclass(frozen=True)
class ViewportChanged:
    viewport: Viewport


@dataclass(frozen=True)
class StateRefreshed:
    pass


@dataclass(frozen=True)
class Rejected:
    reason: str


Event = (
    ElementAdded
    | ElementDeleted
    | ConnectionMade
    | SwitchToggled
    | ModeChanged
    | Cleaned
    | ViewportChanged
    | StateRefreshed
    | Rejected
)
