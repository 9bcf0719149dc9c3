"""Interactive gate-level logic circuit simulator.

Core evaluation lives in :mod:`gateboard.core`, the text format in
:mod:`gateboard.netlist`, interactive editing in
:mod:`gateboard.session`, and the HTTP/socket service in
:mod:`gateboard.service`.
"""

from .core import (
    Circuit,
    EvalResult,
    GateKind,
    InputKind,
    LogicLevel,
    OutputKind,
    TruthTable,
    evaluate,
    gate_function,
    truth_table,
)
from .netlist import ParseError, parse, serialize
from .session import EditorSession

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "EditorSession",
    "EvalResult",
    "GateKind",
    "InputKind",
    "LogicLevel",
    "OutputKind",
    "ParseError",
    "TruthTable",
    "__version__",
    "evaluate",
    "gate_function",
    "parse",
    "serialize",
    "truth_table",
]
