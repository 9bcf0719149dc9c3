"""Exhaustive truth-table generation over a circuit's switches."""

from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit
from .errors import TooManyInputs
from .evaluate import evaluate, indicator_level
from .levels import LogicLevel

DEFAULT_INPUT_CAP = 16


@dataclass(frozen=True)
class TruthTableRow:
    inputs: tuple[int, ...]
    outputs: tuple[LogicLevel, ...]


@dataclass(frozen=True)
class TruthTable:
    """Rows in binary counting order; the first input is the most
    significant bit.  ``inputs``/``outputs`` are element ids, ascending."""

    inputs: tuple[int, ...]
    outputs: tuple[int, ...]
    rows: tuple[TruthTableRow, ...]


def truth_table(circuit: Circuit, cap: int = DEFAULT_INPUT_CAP) -> TruthTable:
    """Enumerate all 2^n switch assignments and record indicator levels.

    Constants keep their value; switch states are restored afterwards, so
    the circuit is left untouched.  Raises TooManyInputs when the switch
    count exceeds ``cap``.
    """
    switches = circuit.switches()
    outputs = circuit.indicators()
    n = len(switches)
    if n > cap:
        raise TooManyInputs(f"{n} switches exceed the cap of {cap}")

    saved = [s.switch_on for s in switches]
    rows = []
    try:
        for assignment in range(1 << n):
            bits = tuple((assignment >> (n - 1 - i)) & 1 for i in range(n))
            for switch, bit in zip(switches, bits):
                switch.switch_on = bool(bit)
            result = evaluate(circuit)
            rows.append(
                TruthTableRow(
                    bits,
                    tuple(
                        indicator_level(result.indicator_states[o.id])
                        for o in outputs
                    ),
                )
            )
    finally:
        for switch, state in zip(switches, saved):
            switch.switch_on = state

    return TruthTable(
        tuple(s.id for s in switches),
        tuple(o.id for o in outputs),
        tuple(rows),
    )
