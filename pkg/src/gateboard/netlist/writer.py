"""Canonical ``.lgc`` serialization.

Output is deterministic: declarations ascending by element id, wires
sorted by (target element, target pin), positions in their shortest
round-trippable decimal form, origin positions omitted.
"""

from __future__ import annotations

import re

from ..core import Circuit, Element, Gate, Indicator, LogicInput

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def display_names(circuit: Circuit) -> dict[int, str]:
    """Stable id -> unique name map; unnamed elements become ``e<id>``."""
    used: set[str] = set()
    names: dict[int, str] = {}
    for el in circuit.elements():
        name = el.name
        if not name or not _NAME.match(name) or name in used:
            name = f"e{el.id}"
            while name in used:
                name += "_"
        used.add(name)
        names[el.id] = name
    return names


def _position_suffix(el: Element) -> str:
    x, y = el.position
    if x == 0.0 and y == 0.0:
        return ""
    return f" @ ({repr(float(x))},{repr(float(y))})"


def _declaration(el: Element, name: str) -> str:
    kind = el.kind
    if isinstance(kind, Gate):
        stmt = f"gate {name} {kind.kind.value}"
    elif isinstance(kind, LogicInput):
        keyword = kind.kind.value
        if el.is_switch:
            keyword = f"switch:{'on' if el.switch_on else 'off'}"
        stmt = f"input {name} {keyword}"
    else:
        assert isinstance(kind, Indicator)
        stmt = f"output {name} {kind.kind.value}"
    return stmt + _position_suffix(el)


def _input_label(circuit: Circuit, element_id: int, index: int) -> str:
    arity = circuit.element(element_id).kind.n_inputs
    return "in" if arity == 1 else f"in{index}"


def serialize(circuit: Circuit) -> str:
    """Render a circuit as canonical ``.lgc`` text (empty circuit -> "")."""
    names = display_names(circuit)
    lines = [_declaration(el, names[el.id]) for el in circuit.elements()]
    for conn in circuit.connections():
        target_label = _input_label(circuit, conn.target.element, conn.target.index)
        lines.append(
            f"wire {names[conn.source.element]}.out"
            f" -> {names[conn.target.element]}.{target_label}"
        )
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
