"""Circuit data model, three-valued evaluation and truth tables."""

from .circuit import (
    Circuit,
    Connection,
    Element,
    ElementKind,
    Gate,
    Indicator,
    InputKind,
    LogicInput,
    OutputKind,
    PinDirection,
    PinRef,
    in_pin,
    out_pin,
    parse_pin_name,
)
from .errors import (
    ArityMismatch,
    BadPin,
    CircuitError,
    DuplicateConnection,
    InputAlreadyDriven,
    NotASwitch,
    TooManyInputs,
    UnknownConnection,
    UnknownElement,
)
from .evaluate import (
    Diagnostic,
    DiagnosticKind,
    EvalResult,
    IndicatorState,
    evaluate,
    indicator_level,
)
from .levels import GateKind, LogicLevel, gate_function
from .table import DEFAULT_INPUT_CAP, TruthTable, TruthTableRow, truth_table

__all__ = [
    "ArityMismatch",
    "BadPin",
    "Circuit",
    "CircuitError",
    "Connection",
    "DEFAULT_INPUT_CAP",
    "Diagnostic",
    "DiagnosticKind",
    "DuplicateConnection",
    "Element",
    "ElementKind",
    "EvalResult",
    "Gate",
    "GateKind",
    "Indicator",
    "IndicatorState",
    "InputAlreadyDriven",
    "InputKind",
    "LogicInput",
    "LogicLevel",
    "NotASwitch",
    "OutputKind",
    "PinDirection",
    "PinRef",
    "TooManyInputs",
    "TruthTable",
    "TruthTableRow",
    "UnknownConnection",
    "UnknownElement",
    "evaluate",
    "gate_function",
    "in_pin",
    "indicator_level",
    "out_pin",
    "parse_pin_name",
    "truth_table",
]
