"""Editor session state machine: taps, modes, viewport, snapshots."""

import math
import random

from conftest import fixture_circuit
from oracles import (
    assert_session_invariants,
    random_session_command,
    snapshot_bytes,
)
from gateboard.core import GateKind, InputKind, OutputKind, PinRef, in_pin, out_pin
from gateboard.session import EditorMode, EditorSession, commands as cmd


def session_with_inverter():
    """switch (1) -> not (2) -> lamp (3), unwired."""
    session = EditorSession()
    session.apply(cmd.AddInput(InputKind.SWITCH))
    session.apply(cmd.AddGate(GateKind.NOT))
    session.apply(cmd.AddOutput(OutputKind.LAMP))
    return session


def test_add_reports_fresh_ids():
    session = EditorSession()
    assert session.apply(cmd.AddGate(GateKind.AND)) == cmd.ElementAdded(1)
    assert session.apply(cmd.AddInput(InputKind.CONST1)) == cmd.ElementAdded(2)
    assert session.apply(cmd.AddOutput(OutputKind.LED)) == cmd.ElementAdded(3)
    assert session.apply(cmd.AddGate(GateKind.XOR, (10.0, 20.0))) == cmd.ElementAdded(4)
    assert session.circuit.element(4).position == (10.0, 20.0)


def test_two_tap_wiring():
    session = session_with_inverter()
    event = session.apply(cmd.TapPin(out_pin(1, 0)))
    assert event == cmd.StateRefreshed()
    assert session.pending_pin == out_pin(1, 0)
    event = session.apply(cmd.TapPin(in_pin(2, 0)))
    assert event == cmd.ConnectionMade(out_pin(1, 0), in_pin(2, 0))
    assert session.pending_pin is None
    assert session.circuit.driver_of(in_pin(2, 0)) == out_pin(1, 0)


def test_input_pin_first_is_rejected():
    session = session_with_inverter()
    event = session.apply(cmd.TapPin(in_pin(2, 0)))
    assert isinstance(event, cmd.Rejected)
    assert "output pin first" in event.reason


def test_second_output_tap_replaces_the_pending_pin():
    session = session_with_inverter()
    session.apply(cmd.AddInput(InputKind.CONST0))  # id 4
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.TapPin(out_pin(4, 0)))
    assert session.pending_pin == out_pin(4, 0)
    session.apply(cmd.TapPin(in_pin(2, 0)))
    assert session.circuit.driver_of(in_pin(2, 0)) == out_pin(4, 0)


def test_failed_connect_keeps_the_pending_pin():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.TapPin(in_pin(2, 0)))
    session.apply(cmd.AddInput(InputKind.CONST1))  # id 4
    session.apply(cmd.TapPin(out_pin(4, 0)))
    event = session.apply(cmd.TapPin(in_pin(2, 0)))  # already driven
    assert isinstance(event, cmd.Rejected)
    assert session.pending_pin == out_pin(4, 0)
    # the user can still complete the wire elsewhere
    event = session.apply(cmd.TapPin(in_pin(3, 0)))
    assert isinstance(event, cmd.ConnectionMade)


def test_tap_on_unknown_pin_is_rejected():
    session = EditorSession()
    event = session.apply(cmd.TapPin(out_pin(9, 0)))
    assert isinstance(event, cmd.Rejected)
    session.apply(cmd.AddGate(GateKind.NOT))
    event = session.apply(cmd.TapPin(in_pin(1, 1)))  # no such pin on a NOT
    assert isinstance(event, cmd.Rejected)


def test_tap_element_toggles_switches():
    session = session_with_inverter()
    event = session.apply(cmd.TapElement(1))
    assert event == cmd.SwitchToggled(1, session.circuit.element(1).source_level())
    assert session.circuit.element(1).switch_on is True
    session.apply(cmd.TapElement(1))
    assert session.circuit.element(1).switch_on is False
    # non-switches just refresh
    assert session.apply(cmd.TapElement(2)) == cmd.StateRefreshed()


def test_toggle_reaches_the_indicator():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.TapPin(in_pin(2, 0)))
    session.apply(cmd.TapPin(out_pin(2, 0)))
    session.apply(cmd.TapPin(in_pin(3, 0)))
    assert session.snapshot()["indicators"] == {"3": "on"}
    session.apply(cmd.TapElement(1))
    assert session.snapshot()["indicators"] == {"3": "off"}


def test_delete_mode_lifecycle():
    session = session_with_inverter()
    event = session.apply(cmd.ToggleDeleteMode())
    assert event == cmd.ModeChanged(EditorMode.DELETE_ACTIVE)

    # element taps delete, and the mode persists across deletions
    assert session.apply(cmd.TapElement(2)) == cmd.ElementDeleted(2)
    assert session.mode is EditorMode.DELETE_ACTIVE
    assert 2 not in session.circuit

    # pin taps do nothing while deleting
    event = session.apply(cmd.TapPin(out_pin(1, 0)))
    assert isinstance(event, cmd.Rejected)

    # switches are deleted, not toggled
    assert session.apply(cmd.TapElement(1)) == cmd.ElementDeleted(1)

    event = session.apply(cmd.ToggleDeleteMode())
    assert event == cmd.ModeChanged(EditorMode.NORMAL)


def test_entering_delete_mode_clears_the_pending_pin():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.ToggleDeleteMode())
    assert session.pending_pin is None


def test_deleting_the_pending_pins_element_clears_it():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.ToggleDeleteMode())
    session.apply(cmd.ToggleDeleteMode())
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.ToggleDeleteMode())
    session.apply(cmd.TapElement(1))
    session.apply(cmd.ToggleDeleteMode())
    assert session.pending_pin is None
    assert_session_invariants(session)


def test_deleting_a_wired_element_drops_its_wires():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.TapPin(in_pin(2, 0)))
    session.apply(cmd.ToggleDeleteMode())
    session.apply(cmd.TapElement(2))
    assert session.circuit.connections() == []


def test_move_element():
    session = session_with_inverter()
    assert session.apply(cmd.MoveElement(2, (7.0, 8.0))) == cmd.StateRefreshed()
    assert session.circuit.element(2).position == (7.0, 8.0)
    assert isinstance(session.apply(cmd.MoveElement(99, (0.0, 0.0))), cmd.Rejected)
    assert isinstance(session.apply(cmd.MoveElement(2, (math.nan, 0.0))), cmd.Rejected)


def test_viewport_zoom_clamps():
    session = EditorSession()
    event = session.apply(cmd.SetViewport(100.0, (5.0, -5.0)))
    assert event == cmd.ViewportChanged(cmd.Viewport(4.0, (5.0, -5.0)))
    session.apply(cmd.SetViewport(0.0001, (0.0, 0.0)))
    assert session.viewport.zoom == 0.25
    assert isinstance(session.apply(cmd.SetViewport(math.inf, (0.0, 0.0))), cmd.Rejected)
    assert isinstance(
        session.apply(cmd.SetViewport(1.0, (math.nan, 0.0))), cmd.Rejected
    )


def test_reset_viewport_restores_defaults():
    session = EditorSession()
    session.apply(cmd.SetViewport(2.0, (30.0, 40.0)))
    event = session.apply(cmd.ResetViewport())
    assert event == cmd.ViewportChanged(cmd.Viewport())
    assert session.viewport == cmd.Viewport(1.0, (0.0, 0.0))


def test_clean_keeps_viewport_and_id_counter():
    session = session_with_inverter()
    session.apply(cmd.SetViewport(2.0, (1.0, 2.0)))
    assert session.apply(cmd.Clean()) == cmd.Cleaned()
    assert session.circuit.elements() == []
    assert session.viewport == cmd.Viewport(2.0, (1.0, 2.0))
    assert session.apply(cmd.AddGate(GateKind.OR)) == cmd.ElementAdded(4)


def test_new_circuit_resets_everything():
    session = session_with_inverter()
    session.apply(cmd.SetViewport(2.0, (1.0, 2.0)))
    session.apply(cmd.ToggleDeleteMode())
    assert session.apply(cmd.NewCircuit()) == cmd.Cleaned()
    assert session.mode is EditorMode.NORMAL
    assert session.viewport == cmd.Viewport()
    assert session.apply(cmd.AddGate(GateKind.OR)) == cmd.ElementAdded(1)


def test_snapshot_carries_session_fields():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    snapshot = session.snapshot()
    assert snapshot["mode"] == "normal"
    assert snapshot["pending_pin"] == "1.out0"
    assert snapshot["viewport"] == {"zoom": 1.0, "pan": {"dx": 0.0, "dy": 0.0}}
    assert len(snapshot["elements"]) == 3


def test_load_replaces_the_circuit():
    session = session_with_inverter()
    session.apply(cmd.TapPin(out_pin(1, 0)))
    session.apply(cmd.SetViewport(3.0, (9.0, 9.0)))
    event = session.load(fixture_circuit("half_adder.lgc"))
    assert event == cmd.StateRefreshed()
    assert session.pending_pin is None
    assert session.viewport == cmd.Viewport()
    assert len(session.circuit.elements()) == 6
    assert_session_invariants(session)


def test_half_adder_row_three_live():
    session = EditorSession()
    session.load(fixture_circuit("half_adder.lgc"))
    first_switch = session.circuit.switches()[0].id
    session.apply(cmd.TapElement(first_switch))  # A=1, B=0
    assert session.snapshot()["indicators"] == {"5": "on", "6": "off"}


def test_fuzz_invariants_and_replay():
    # a shorter cousin of the acceptance fuzz, for quick local signal
    rng = random.Random(5150)
    session = EditorSession()
    commands = []
    for _ in range(600):
        command = random_session_command(rng, session)
        commands.append(command)
        session.apply(command)
        assert_session_invariants(session)

    replay = EditorSession()
    for command in commands:
        replay.apply(command)
    assert snapshot_bytes(replay) == snapshot_bytes(session)
