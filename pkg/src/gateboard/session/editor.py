"""The editor session state machine.

Wiring follows the output-first tap order: tapping an output pin latches
it as pending, tapping an input pin afterwards makes the connection.
Delete mode persists across deletions until toggled off.  Every mutating
command re-evaluates the circuit, so ``last_eval`` is always current --
there is no separate "run" step.
"""

from __future__ import annotations

import math

from ..core import (
    Circuit,
    CircuitError,
    Gate,
    Indicator,
    LogicInput,
    PinDirection,
    PinRef,
    evaluate,
)
from ..netlist import export_state
from . import commands as cmd


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


class EditorSession:
    def __init__(self) -> None:
        self.circuit = Circuit()
        self.mode = cmd.EditorMode.NORMAL
        self.pending_pin: PinRef | None = None
        self.viewport = cmd.Viewport()
        self.last_eval = evaluate(self.circuit)

    # ------------------------------------------------------------------

    def apply(self, command: cmd.Command) -> cmd.Event:
        """Apply one command, returning exactly one event."""
        handler = self._HANDLERS[type(command)]
        return handler(self, command)

    def snapshot(self) -> dict:
        """Full session state as a protocol StateDocument."""
        doc = export_state(self.circuit, self.last_eval)
        doc["mode"] = self.mode.value
        doc["pending_pin"] = str(self.pending_pin) if self.pending_pin else None
        doc["viewport"] = {
            "zoom": self.viewport.zoom,
            "pan": {"dx": self.viewport.pan[0], "dy": self.viewport.pan[1]},
        }
        return doc

    def load(self, circuit: Circuit) -> cmd.Event:
        """Replace the circuit wholesale (file load); viewport resets."""
        self.circuit = circuit
        self.pending_pin = None
        self.viewport = cmd.Viewport()
        self._refresh()
        return cmd.StateRefreshed()

    # ------------------------------------------------------------------

    def _refresh(self) -> None:
        self.last_eval = evaluate(self.circuit)
        if self.pending_pin is not None and self.pending_pin.element not in self.circuit:
            self.pending_pin = None

    def _add(self, kind, position) -> cmd.Event:
        if not _finite(*position):
            return cmd.Rejected("position must be finite")
        element_id = self.circuit.add_element(kind, position)
        self._refresh()
        return cmd.ElementAdded(element_id)

    def _add_gate(self, command: cmd.AddGate) -> cmd.Event:
        return self._add(Gate(command.kind), command.position)

    def _add_input(self, command: cmd.AddInput) -> cmd.Event:
        return self._add(LogicInput(command.kind), command.position)

    def _add_output(self, command: cmd.AddOutput) -> cmd.Event:
        return self._add(Indicator(command.kind), command.position)

    def _tap_pin(self, command: cmd.TapPin) -> cmd.Event:
        pin = command.pin
        if self.mode is cmd.EditorMode.DELETE_ACTIVE:
            return cmd.Rejected("delete mode is active; tap an element to delete it")
        try:
            self.circuit.check_pin(pin)
        except CircuitError as exc:
            return cmd.Rejected(str(exc))
        if pin.direction is PinDirection.OUT:
            # Latch (or re-latch) the wire source.
            self.pending_pin = pin
            return cmd.StateRefreshed()
        if self.pending_pin is None:
            return cmd.Rejected("select an output pin first")
        try:
            connection = self.circuit.connect(self.pending_pin, pin)
        except CircuitError as exc:
            # Keep the pending pin so the user can retry elsewhere.
            return cmd.Rejected(str(exc))
        self.pending_pin = None
        self._refresh()
        return cmd.ConnectionMade(connection.source, connection.target)

    def _tap_element(self, command: cmd.TapElement) -> cmd.Event:
        if command.element not in self.circuit:
            return cmd.Rejected(f"no element with id {command.element}")
        if self.mode is cmd.EditorMode.DELETE_ACTIVE:
            self.circuit.remove_element(command.element)
            self._refresh()
            return cmd.ElementDeleted(command.element)
        element = self.circuit.element(command.element)
        if element.is_switch:
            level = self.circuit.toggle_switch(command.element)
            self._refresh()
            return cmd.SwitchToggled(command.element, level)
        return cmd.StateRefreshed()

    def _move_element(self, command: cmd.MoveElement) -> cmd.Event:
        if not _finite(*command.position):
            return cmd.Rejected("position must be finite")
        if command.element not in self.circuit:
            return cmd.Rejected(f"no element with id {command.element}")
        self.circuit.move_element(command.element, command.position)
        return cmd.StateRefreshed()

    def _toggle_delete_mode(self, command: cmd.ToggleDeleteMode) -> cmd.Event:
        if self.mode is cmd.EditorMode.NORMAL:
            self.mode = cmd.EditorMode.DELETE_ACTIVE
            self.pending_pin = None
        else:
            self.mode = cmd.EditorMode.NORMAL
        return cmd.ModeChanged(self.mode)

    def _clean(self, command: cmd.Clean) -> cmd.Event:
        # Clears the canvas but keeps the viewport and the id counter.
        self.circuit.clear()
        self.pending_pin = None
        self._refresh()
        return cmd.Cleaned()

    def _set_viewport(self, command: cmd.SetViewport) -> cmd.Event:
        if not _finite(command.zoom, *command.pan):
            return cmd.Rejected("viewport values must be finite")
        zoom = min(max(command.zoom, cmd.ZOOM_MIN), cmd.ZOOM_MAX)
        self.viewport = cmd.Viewport(zoom, command.pan)
        return cmd.ViewportChanged(self.viewport)

    def _reset_viewport(self, command: cmd.ResetViewport) -> cmd.Event:
        self.viewport = cmd.Viewport()
        return cmd.ViewportChanged(self.viewport)

    def _new_circuit(self, command: cmd.NewCircuit) -> cmd.Event:
        # A brand-new circuit, unlike Clean: ids restart and everything
        # (viewport, mode, pending pin) returns to defaults.
        self.circuit = Circuit()
        self.mode = cmd.EditorMode.NORMAL
        self.pending_pin = None
        self.viewport = cmd.Viewport()
        self._refresh()
        return cmd.Cleaned()

    _HANDLERS = {
        cmd.AddGate: _add_gate,
        cmd.AddInput: _add_input,
        cmd.AddOutput: _add_output,
        cmd.TapPin: _tap_pin,
        cmd.TapElement: _tap_element,
        cmd.MoveElement: _move_element,
        cmd.ToggleDeleteMode: _toggle_delete_mode,
        cmd.Clean: _clean,
        cmd.SetViewport: _set_viewport,
        cmd.ResetViewport: _reset_viewport,
        cmd.NewCircuit: _new_circuit,
    }
