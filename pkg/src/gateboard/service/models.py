"""Wire format of the command protocol.

The same command payloads travel over REST (body of POST
/session/{id}/command) and over the socket protocol, which adds the
session id to each message. Responses always carry a full state
snapshot; clients never need to patch state incrementally.
"""

from __future__ import annotations

from typing import Annotated, Literal, Union

from pydantic import BaseModel, Field

from ..core import GateKind, InputKind, OutputKind, PinRef, parse_pin_name
from ..session import Viewport, commands as cmd

_PIN_PATTERN = r"^(in|out)[0-9]*$"


class PositionModel(BaseModel):
    x: float = 0.0
    y: float = 0.0

    def to_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


class PanModel(BaseModel):
    dx: float = 0.0
    dy: float = 0.0


class AddGateModel(BaseModel):
    type: Literal["add_gate"]
    gate: Literal["and", "or", "not", "nand", "nor", "xor", "xnor", "buf"]
    position: PositionModel = PositionModel()

    def to_command(self) -> cmd.AddGate:
        return cmd.AddGate(GateKind(self.gate), self.position.to_tuple())


class AddInputModel(BaseModel):
    type: Literal["add_input"]
    input: Literal["const0", "const1", "switch"]
    position: PositionModel = PositionModel()

    def to_command(self) -> cmd.AddInput:
        return cmd.AddInput(InputKind(self.input), self.position.to_tuple())


class AddOutputModel(BaseModel):
    type: Literal["add_output"]
    output: Literal["lamp", "led"]
    position: PositionModel = PositionModel()

    def to_command(self) -> cmd.AddOutput:
        return cmd.AddOutput(OutputKind(self.output), self.position.to_tuple())


class TapPinModel(BaseModel):
    type: Literal["tap_pin"]
    element: int
    pin: str = Field(pattern=_PIN_PATTERN)

    def to_command(self) -> cmd.TapPin:
        direction, index = parse_pin_name(self.pin)
        return cmd.TapPin(PinRef(self.element, direction, index))


class TapElementModel(BaseModel):
    type: Literal["tap_element"]
    element: int

    def to_command(self) -> cmd.TapElement:
        return cmd.TapElement(self.element)


class MoveElementModel(BaseModel):
    type: Literal["move_element"]
    element: int
    position: PositionModel

    def to_command(self) -> cmd.MoveElement:
        return cmd.MoveElement(self.element, self.position.to_tuple())


class ToggleDeleteModeModel(BaseModel):
    type: Literal["toggle_delete_mode"]

    def to_command(self) -> cmd.ToggleDeleteMode:
        return cmd.ToggleDeleteMode()


class CleanModel(BaseModel):
    type: Literal["clean"]

    def to_command(self) -> cmd.Clean:
        return cmd.Clean()


class SetViewportModel(BaseModel):
    type: Literal["set_viewport"]
    zoom: float = 1.0
    pan: PanModel = PanModel()

    def to_command(self) -> cmd.SetViewport:
        return cmd.SetViewport(self.zoom, (self.pan.dx, self.pan.dy))


class ResetViewportModel(BaseModel):
    type: Literal["reset_viewport"]

    def to_command(self) -> cmd.ResetViewport:
        return cmd.ResetViewport()


class NewCircuitModel(BaseModel):
    type: Literal["new_circuit"]

    def to_command(self) -> cmd.NewCircuit:
        return cmd.NewCircuit()


CommandModel = Annotated[
    Union[
        AddGateModel,
        AddInputModel,
        AddOutputModel,
        TapPinModel,
        TapElementModel,
        MoveElementModel,
        ToggleDeleteModeModel,
        CleanModel,
        SetViewportModel,
        ResetViewportModel,
        NewCircuitModel,
    ],
    Field(discriminator="type"),
]


class CommandRequest(BaseModel):
    # any int is accepted here; the session manager answers out_of_order
    # for everything except exactly last_seq + 1
    seq: int
    command: CommandModel


class SocketRequest(CommandRequest):
    session: str


class SessionInfo(BaseModel):
    session: str
    seq: int
    state: dict


class CommandResult(BaseModel):
    seq: int
    event: dict
    state: dict


class LoadResult(BaseModel):
    event: dict
    state: dict


class NamedCircuit(BaseModel):
    name: str


class SaveResult(BaseModel):
    saved: str


class CircuitsList(BaseModel):
    circuits: list[str]


def _pin_wire(pin: PinRef) -> dict:
    return {"element": pin.element, "pin": f"{pin.direction.value}{pin.index}"}


def event_to_wire(event: cmd.Event) -> dict:
    """Flatten an editor event into its JSON shape, tagged by "kind"."""
    if isinstance(event, cmd.ElementAdded):
        return {"kind": "element_added", "element": event.element}
    if isinstance(event, cmd.ElementDeleted):
        return {"kind": "element_deleted", "element": event.element}
    if isinstance(event, cmd.ConnectionMade):
        return {
            "kind": "connection_made",
            "from": _pin_wire(event.source),
            "to": _pin_wire(event.target),
        }
    if isinstance(event, cmd.SwitchToggled):
        return {
            "kind": "switch_toggled",
            "element": event.element,
            "level": event.level.symbol,
        }
    if isinstance(event, cmd.ModeChanged):
        return {"kind": "mode_changed", "mode": event.mode.value}
    if isinstance(event, cmd.Cleaned):
        return {"kind": "cleaned"}
    if isinstance(event, cmd.ViewportChanged):
        viewport: Viewport = event.viewport
        return {
            "kind": "viewport_changed",
            "viewport": {
                "zoom": viewport.zoom,
                "pan": {"dx": viewport.pan[0], "dy": viewport.pan[1]},
            },
        }
    if isinstance(event, cmd.StateRefreshed):
        return {"kind": "state_refreshed"}
    if isinstance(event, cmd.Rejected):
        return {"kind": "rejected", "reason": event.reason}
    raise TypeError(f"unhandled event {event!r}")
