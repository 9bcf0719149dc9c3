"""Tree-structured circuit/evaluation export for the session protocol.

The returned document is plain JSON-serializable data; field names are
normative for the service protocol (see docs/protocol.md).  All lists
and map keys are emitted in sorted order so exports are deterministic.
"""

from __future__ import annotations

from ..core import Circuit, EvalResult, Gate, Indicator, LogicInput


def _element_entry(el) -> dict:
    kind = el.kind
    if isinstance(kind, Gate):
        label, params = "gate", {"gate": kind.kind.value}
    elif isinstance(kind, LogicInput):
        label, params = "input", {"input": kind.kind.value}
        if el.is_switch:
            params["on"] = el.switch_on
    else:
        assert isinstance(kind, Indicator)
        label, params = "output", {"output": kind.kind.value}
    return {
        "id": el.id,
        "kind": label,
        "params": params,
        "position": {"x": el.position[0], "y": el.position[1]},
        "name": el.name,
    }


def export_state(circuit: Circuit, result: EvalResult) -> dict:
    """Bundle elements, wiring, levels, indicators and diagnostics."""
    return {
        "elements": [_element_entry(el) for el in circuit.elements()],
        "connections": [
            {
                "from": {"element": c.source.element, "pin": f"out{c.source.index}"},
                "to": {"element": c.target.element, "pin": f"in{c.target.index}"},
            }
            for c in circuit.connections()
        ],
        "levels": {
            str(pin): result.levels[pin].symbol
            for pin in sorted(result.levels, key=lambda p: (p.element, p.index))
        },
        "indicators": {
            str(eid): state.value
            for eid, state in sorted(result.indicator_states.items())
        },
        "diagnostics": [
            {
                "kind": d.kind.value,
                "elements": list(d.elements),
                "pins": [str(p) for p in d.pins],
                "message": d.message,
            }
            for d in result.diagnostics
        ],
    }
