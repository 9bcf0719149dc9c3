"""Whole-circuit evaluation: levels, indicators, diagnostics."""

import random

import pytest

from conftest import fixture_circuit
from oracles import fixpoint_levels, random_circuit, sweep_assignments
from gateboard.core import (
    Circuit,
    DiagnosticKind,
    Gate,
    GateKind,
    Indicator,
    IndicatorState,
    InputKind,
    LogicInput,
    LogicLevel,
    OutputKind,
    evaluate,
    in_pin,
    out_pin,
)


def test_empty_circuit():
    result = evaluate(Circuit())
    assert result.levels == {}
    assert result.indicator_states == {}
    assert result.diagnostics == []


def test_constants_drive_their_level():
    c = Circuit()
    zero = c.add_element(LogicInput(InputKind.CONST0))
    one = c.add_element(LogicInput(InputKind.CONST1))
    result = evaluate(c)
    assert result.levels[out_pin(zero, 0)] is LogicLevel.LOW
    assert result.levels[out_pin(one, 0)] is LogicLevel.HIGH


def test_indicator_states_cover_all_three_levels():
    c = Circuit()
    one = c.add_element(LogicInput(InputKind.CONST1))
    zero = c.add_element(LogicInput(InputKind.CONST0))
    on = c.add_element(Indicator(OutputKind.LAMP))
    off = c.add_element(Indicator(OutputKind.LED))
    floating = c.add_element(Indicator(OutputKind.LAMP))
    c.connect(out_pin(one, 0), in_pin(on, 0))
    c.connect(out_pin(zero, 0), in_pin(off, 0))
    result = evaluate(c)
    assert result.indicator_states[on] is IndicatorState.ON
    assert result.indicator_states[off] is IndicatorState.OFF
    assert result.indicator_states[floating] is IndicatorState.UNDEFINED


def test_half_adder_rows(half_adder):
    a, b = [e.id for e in half_adder.switches()]
    s, c0 = [e.id for e in half_adder.indicators()]
    expect = {
        (False, False): ("off", "off"),
        (False, True): ("on", "off"),
        (True, False): ("on", "off"),
        (True, True): ("off", "on"),
    }
    for (va, vb), (want_s, want_c0) in expect.items():
        half_adder.set_switch(a, va)
        half_adder.set_switch(b, vb)
        result = evaluate(half_adder)
        assert result.indicator_states[s].value == want_s
        assert result.indicator_states[c0].value == want_c0


def test_floating_input_names_the_exact_pin():
    circuit = fixture_circuit("missing_wire.lgc")
    result = evaluate(circuit)
    floating = [d for d in result.diagnostics if d.kind is DiagnosticKind.FLOATING_INPUT]
    assert len(floating) == 1
    gate = next(e for e in circuit.elements() if isinstance(e.kind, Gate))
    assert floating[0].pins == (in_pin(gate.id, 1),)
    assert str(in_pin(gate.id, 1)) in floating[0].message


def test_floating_input_still_lets_domination_decide():
    # and(0, x) is 0, so the lamp stays off rather than undefined
    circuit = fixture_circuit("missing_wire.lgc")
    result = evaluate(circuit)
    lamp = circuit.indicators()[0]
    assert result.indicator_states[lamp.id] is IndicatorState.OFF


def test_nand_self_loop_reports_one_cycle():
    circuit = fixture_circuit("nand_selfloop.lgc")
    result = evaluate(circuit)
    cycles = [d for d in result.diagnostics if d.kind is DiagnosticKind.COMBINATIONAL_CYCLE]
    assert len(cycles) == 1
    gate = next(e for e in circuit.elements() if isinstance(e.kind, Gate))
    assert cycles[0].elements == (gate.id,)
    assert result.levels[out_pin(gate.id, 0)] is LogicLevel.UNDEFINED
    assert result.indicator_states[circuit.indicators()[0].id] is IndicatorState.UNDEFINED


def test_two_gate_ring_is_one_cycle_group():
    c = Circuit()
    g1 = c.add_element(Gate(GateKind.NOT))
    g2 = c.add_element(Gate(GateKind.NOT))
    c.connect(out_pin(g1, 0), in_pin(g2, 0))
    c.connect(out_pin(g2, 0), in_pin(g1, 0))
    result = evaluate(c)
    cycles = [d for d in result.diagnostics if d.kind is DiagnosticKind.COMBINATIONAL_CYCLE]
    assert [d.elements for d in cycles] == [(g1, g2)]


def test_independent_cycles_get_separate_diagnostics():
    c = Circuit()
    ids = []
    for _ in range(2):
        g = c.add_element(Gate(GateKind.BUFFER))
        c.connect(out_pin(g, 0), in_pin(g, 0))
        ids.append(g)
    result = evaluate(c)
    cycles = sorted(
        d.elements
        for d in result.diagnostics
        if d.kind is DiagnosticKind.COMBINATIONAL_CYCLE
    )
    assert cycles == [(ids[0],), (ids[1],)]


def test_element_downstream_of_cycle_is_not_blamed():
    c = Circuit()
    looped = c.add_element(Gate(GateKind.BUFFER))
    after = c.add_element(Gate(GateKind.NOT))
    c.connect(out_pin(looped, 0), in_pin(looped, 0))
    c.connect(out_pin(looped, 0), in_pin(after, 0))
    result = evaluate(c)
    cycles = [d for d in result.diagnostics if d.kind is DiagnosticKind.COMBINATIONAL_CYCLE]
    assert [d.elements for d in cycles] == [(looped,)]
    # downstream element still evaluates, with the undefined feed
    assert result.levels[out_pin(after, 0)] is LogicLevel.UNDEFINED


def test_gate_feeding_a_cycle_still_evaluates():
    c = Circuit()
    src = c.add_element(LogicInput(InputKind.CONST1))
    before = c.add_element(Gate(GateKind.NOT))
    looped = c.add_element(Gate(GateKind.AND))
    c.connect(out_pin(src, 0), in_pin(before, 0))
    c.connect(out_pin(before, 0), in_pin(looped, 0))
    c.connect(out_pin(looped, 0), in_pin(looped, 1))
    result = evaluate(c)
    assert result.levels[out_pin(before, 0)] is LogicLevel.LOW
    assert result.levels[out_pin(looped, 0)] is LogicLevel.UNDEFINED


def test_evaluate_does_not_mutate_the_circuit(half_adder):
    before = [(e.id, e.kind, e.switch_on) for e in half_adder.elements()]
    wires = half_adder.connections()
    evaluate(half_adder)
    assert [(e.id, e.kind, e.switch_on) for e in half_adder.elements()] == before
    assert half_adder.connections() == wires


def test_matches_sweep_oracle_on_random_circuits():
    rng = random.Random(2024)
    for _ in range(60):
        circuit = random_circuit(rng)
        for _ in sweep_assignments(circuit):
            assert evaluate(circuit).levels == fixpoint_levels(circuit)


def test_diagnostic_messages_are_human_readable():
    circuit = fixture_circuit("nand_selfloop.lgc")
    (diag,) = [
        d
        for d in evaluate(circuit).diagnostics
        if d.kind is DiagnosticKind.COMBINATIONAL_CYCLE
    ]
    assert "cycle" in diag.message
