"""Level propagation over the connection graph.

Evaluation never fails: incomplete or even cyclic circuits produce a
result plus diagnostics, so an editor can re-evaluate after every single
edit.  Undriven input pins read UNDEFINED, and every output pin that sits
on a directed cycle is forced to UNDEFINED (there is no sequential logic
here to give a cycle meaning).
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass

from .circuit import Circuit, Gate, Indicator, LogicInput, PinRef, in_pin, out_pin
from .levels import LogicLevel, gate_function


class DiagnosticKind(enum.Enum):
    FLOATING_INPUT = "floating_input"
    COMBINATIONAL_CYCLE = "combinational_cycle"


class IndicatorState(enum.Enum):
    ON = "on"
    OFF = "off"
    UNDEFINED = "undefined"


_LEVEL_TO_INDICATOR = {
    LogicLevel.HIGH: IndicatorState.ON,
    LogicLevel.LOW: IndicatorState.OFF,
    LogicLevel.UNDEFINED: IndicatorState.UNDEFINED,
}

_INDICATOR_TO_LEVEL = {v: k for k, v in _LEVEL_TO_INDICATOR.items()}


def indicator_level(state: IndicatorState) -> LogicLevel:
    return _INDICATOR_TO_LEVEL[state]


@dataclass(frozen=True)
class Diagnostic:
    kind: DiagnosticKind
    elements: tuple[int, ...]
    pins: tuple[PinRef, ...]
    message: str


@dataclass
class EvalResult:
    """Levels for every output pin, indicator on/off states, diagnostics."""

    levels: dict[PinRef, LogicLevel]
    indicator_states: dict[int, IndicatorState]
    diagnostics: list[Diagnostic]


def _cycle_groups(adjacency: dict[int, set[int]]) -> list[tuple[int, ...]]:
    """Strongly connected components that contain a directed cycle.

    Iterative Tarjan; returns each cyclic SCC as a sorted id tuple
    (singletons only when the node drives itself).
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = 0
    groups: list[tuple[int, ...]] = []

    for root in sorted(adjacency):
        if root in index:
            continue
        work = [(root, iter(sorted(adjacency[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, successors = work[-1]
            advanced = False
            for nxt in successors:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(sorted(adjacency[nxt]))))
                    advanced = True
                    break
                if nxt in on_stack:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                if len(component) > 1 or node in adjacency[node]:
                    groups.append(tuple(sorted(component)))
    groups.sort(key=lambda g: g[0])
    return groups


def evaluate(circuit: Circuit) -> EvalResult:
    """Propagate levels in topological order and collect diagnostics.

    Deterministic for a given graph regardless of insertion order.
    """
    elements = circuit.elements()
    connections = circuit.connections()

    adjacency: dict[int, set[int]] = {e.id: set() for e in elements}
    out_edges: dict[int, list[int]] = {e.id: [] for e in elements}
    for conn in connections:
        adjacency[conn.source.element].add(conn.target.element)
        out_edges[conn.source.element].append(conn.target.element)

    cycle_sccs = _cycle_groups(adjacency)
    cyclic = {eid for group in cycle_sccs for eid in group}

    levels: dict[PinRef, LogicLevel] = {}
    for eid in cyclic:
        el = circuit.element(eid)
        for i in range(el.kind.n_outputs):
            levels[out_pin(eid, i)] = LogicLevel.UNDEFINED

    # Undriven gate/indicator inputs, found by direct scan so that floating
    # pins inside cycles are reported too.
    floating = [
        in_pin(e.id, i)
        for e in elements
        for i in range(e.kind.n_inputs)
        if circuit.driver_of(in_pin(e.id, i)) is None
    ]
    floating_set = set(floating)

    def read(pin: PinRef) -> LogicLevel:
        if pin in floating_set:
            return LogicLevel.UNDEFINED
        return levels[circuit.driver_of(pin)]

    # Kahn over the acyclic remainder; edges out of cyclic elements are
    # already resolved (their levels are pinned to UNDEFINED above).
    unresolved = {
        e.id: sum(
            1
            for i in range(e.kind.n_inputs)
            if (drv := circuit.driver_of(in_pin(e.id, i))) is not None
            and drv.element not in cyclic
        )
        for e in elements
        if e.id not in cyclic
    }
    ready = [eid for eid, count in unresolved.items() if count == 0]
    heapq.heapify(ready)

    indicator_states: dict[int, IndicatorState] = {}
    while ready:
        eid = heapq.heappop(ready)
        el = circuit.element(eid)
        kind = el.kind
        if isinstance(kind, LogicInput):
            levels[out_pin(eid)] = el.source_level()
        elif isinstance(kind, Gate):
            inputs = [read(in_pin(eid, i)) for i in range(kind.n_inputs)]
            levels[out_pin(eid)] = gate_function(kind.kind, inputs)
        else:
            assert isinstance(kind, Indicator)
            indicator_states[eid] = _LEVEL_TO_INDICATOR[read(in_pin(eid))]
        for successor in out_edges[eid]:
            if successor in unresolved:
                unresolved[successor] -= 1
                if unresolved[successor] == 0:
                    heapq.heappush(ready, successor)

    diagnostics: list[Diagnostic] = []
    for group in cycle_sccs:
        pins = tuple(out_pin(eid) for eid in group)
        names = ", ".join(str(eid) for eid in group)
        diagnostics.append(
            Diagnostic(
                DiagnosticKind.COMBINATIONAL_CYCLE,
                group,
                pins,
                f"combinational cycle through element(s) {names}",
            )
        )
    for pin in floating:
        diagnostics.append(
            Diagnostic(
                DiagnosticKind.FLOATING_INPUT,
                (pin.element,),
                (pin,),
                f"input pin {pin} has no driver",
            )
        )
    return EvalResult(levels, indicator_states, diagnostics)
