"""Three-valued signal levels and the per-gate logic functions.

Levels are ``LOW``, ``HIGH`` and ``UNDEFINED``.  ``UNDEFINED`` stands for a
signal with no stable meaning (an unwired pin, or a wire caught in a
combinational cycle) and propagates through gates with the usual
domination rules: a ``LOW`` input already decides an AND, a ``HIGH`` input
already decides an OR, while XOR-like gates need every input to be known.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence

from .errors import ArityMismatch


class LogicLevel(enum.Enum):
    LOW = "0"
    HIGH = "1"
    UNDEFINED = "x"

    @classmethod
    def from_bool(cls, value: bool) -> "LogicLevel":
        return cls.HIGH if value else cls.LOW

    @property
    def symbol(self) -> str:
        """Single-character rendering: ``0``, ``1`` or ``x``."""
        return self.value

    def __invert__(self) -> "LogicLevel":
        if self is LogicLevel.UNDEFINED:
            return self
        return LogicLevel.LOW if self is LogicLevel.HIGH else LogicLevel.HIGH


class GateKind(enum.Enum):
    """The fixed gate catalog.  Enum values double as netlist keywords."""

    AND = "and"
    OR = "or"
    NOT = "not"
    NAND = "nand"
    NOR = "nor"
    XOR = "xor"
    XNOR = "xnor"
    BUFFER = "buf"

    @property
    def arity(self) -> int:
        return 1 if self in (GateKind.NOT, GateKind.BUFFER) else 2


def _and3(inputs: Sequence[LogicLevel]) -> LogicLevel:
    if any(v is LogicLevel.LOW for v in inputs):
        return LogicLevel.LOW
    if any(v is LogicLevel.UNDEFINED for v in inputs):
        return LogicLevel.UNDEFINED
    return LogicLevel.HIGH


def _or3(inputs: Sequence[LogicLevel]) -> LogicLevel:
    if any(v is LogicLevel.HIGH for v in inputs):
        return LogicLevel.HIGH
    if any(v is LogicLevel.UNDEFINED for v in inputs):
        return LogicLevel.UNDEFINED
    return LogicLevel.LOW


def _xor3(inputs: Sequence[LogicLevel]) -> LogicLevel:
    # Strict: any undefined input makes the parity unknowable.
    if any(v is LogicLevel.UNDEFINED for v in inputs):
        return LogicLevel.UNDEFINED
    ones = sum(v is LogicLevel.HIGH for v in inputs)
    return LogicLevel.from_bool(ones % 2 == 1)


_GATE_FUNCTIONS = {
    GateKind.AND: _and3,
    GateKind.NAND: lambda ins: ~_and3(ins),
    GateKind.OR: _or3,
    GateKind.NOR: lambda ins: ~_or3(ins),
    GateKind.XOR: _xor3,
    GateKind.XNOR: lambda ins: ~_xor3(ins),
    GateKind.BUFFER: lambda ins: ins[0],
    GateKind.NOT: lambda ins: ~ins[0],
}


def gate_function(kind: GateKind, inputs: Sequence[LogicLevel]) -> LogicLevel:
    """Apply one gate's function to already-resolved input levels.

    Raises ArityMismatch unless exactly ``kind.arity`` inputs are given.
    """
    if len(inputs) != kind.arity:
        raise ArityMismatch(
            f"{kind.value} takes {kind.arity} input(s), got {len(inputs)}"
        )
    return _GATE_FUNCTIONS[kind](inputs)
