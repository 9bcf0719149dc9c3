"""Command-line front end.

Subcommands: eval, table, check, fmt, serve. Exit codes follow the
usual convention: 0 on success, 1 for usage or parse errors, 2 when a
circuit carries semantic diagnostics (check always, eval with
--strict).
"""

from __future__ import annotations

import argparse
import os
import socket
import sys
from pathlib import Path

from .core import (
    Circuit,
    Diagnostic,
    DiagnosticKind,
    DEFAULT_INPUT_CAP,
    TooManyInputs,
    TruthTable,
    evaluate,
    truth_table,
)
from .netlist import ParseError, display_names, parse, serialize


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for
    # semantic diagnostics, so usage problems exit 1 instead.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_source(path: str) -> tuple[str, str]:
    """Return (text, display_name) for a file path or '-' for stdin."""
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(encoding="utf-8"), path
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_circuit(path: str) -> tuple[Circuit, str]:
    text, shown = _read_source(path)
    try:
        return parse(text), shown
    except ParseError as exc:
        raise CliError(f"{shown}:{exc.line}:{exc.column}: error: {exc.message}") from None


def _pin_label(circuit: Circuit, names: dict[int, str], element: int, index: int) -> str:
    suffix = "in" if circuit.element(element).kind.n_inputs == 1 else f"in{index}"
    return f"{names[element]}.{suffix}"


def _render_diagnostic(circuit: Circuit, names: dict[int, str], diag: Diagnostic) -> str:
    if diag.kind is DiagnosticKind.FLOATING_INPUT:
        pin = diag.pins[0]
        return f"floating input: {_pin_label(circuit, names, pin.element, pin.index)} has no driver"
    members = ", ".join(names[e] for e in diag.elements)
    return f"combinational cycle: {members}"


def _apply_sets(circuit: Circuit, names: dict[int, str], sets: list[str]) -> None:
    by_name = {name: element for element, name in names.items()}
    for item in sets:
        name, eq, value = item.partition("=")
        if not eq or value.lower() not in ("0", "1", "on", "off"):
            raise CliError(f"--set expects name=0|1, got {item!r}")
        element = by_name.get(name)
        if element is None:
            raise CliError(f"--set {item!r}: no element named {name!r}")
        if not circuit.element(element).is_switch:
            raise CliError(f"--set {item!r}: {name!r} is not a switch")
        circuit.set_switch(element, value.lower() in ("1", "on"))


def _render_table_text(table: TruthTable, names: dict[int, str]) -> str:
    headers = [names[i] for i in table.inputs] + [names[o] for o in table.outputs]
    widths = [max(1, len(h)) for h in headers]
    lines = [" ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in table.rows:
        cells = [str(bit) for bit in row.inputs]
        cells += [level.symbol for level in row.outputs]
        lines.append(" ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_table_csv(table: TruthTable, names: dict[int, str]) -> str:
    headers = [names[i] for i in table.inputs] + [names[o] for o in table.outputs]
    lines = [",".join(headers)]
    for row in table.rows:
        cells = [str(bit) for bit in row.inputs]
        cells += [level.symbol for level in row.outputs]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _default_cap() -> int:
    return int(os.environ.get("GATEBOARD_TABLE_CAP", DEFAULT_INPUT_CAP))


def cmd_eval(args) -> int:
    circuit, _ = _load_circuit(args.file)
    names = display_names(circuit)
    _apply_sets(circuit, names, args.set)
    result = evaluate(circuit)
    for element in circuit.indicators():
        state = result.indicator_states[element.id]
        print(f"{names[element.id]}: {state.value}")
    for diag in result.diagnostics:
        print(_render_diagnostic(circuit, names, diag), file=sys.stderr)
    if args.strict and result.diagnostics:
        return 2
    return 0


def cmd_table(args) -> int:
    circuit, _ = _load_circuit(args.file)
    names = display_names(circuit)
    try:
        table = truth_table(circuit, cap=args.cap)
    except TooManyInputs as exc:
        raise CliError(str(exc)) from None
    render = _render_table_csv if args.format == "csv" else _render_table_text
    sys.stdout.write(render(table, names))
    return 0


def cmd_check(args) -> int:
    circuit, _ = _load_circuit(args.file)
    names = display_names(circuit)
    result = evaluate(circuit)
    for diag in result.diagnostics:
        print(_render_diagnostic(circuit, names, diag))
    return 2 if result.diagnostics else 0


def cmd_fmt(args) -> int:
    circuit, _ = _load_circuit(args.file)
    text = serialize(circuit)
    if args.write:
        if args.file == "-":
            raise CliError("--write needs a file path, not stdin")
        Path(args.file).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _check_port_free(host: str, port: int) -> None:
    if port == 0:
        return
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((host, port))
    except OSError as exc:
        raise CliError(f"cannot listen on {host}:{port}: {exc.strerror or exc}") from None
    finally:
        probe.close()


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app, load_config, parse_addr

    try:
        if args.addr:
            parse_addr(args.addr)
        config = load_config(
            addr=args.addr,
            data_dir=args.data_dir,
            table_cap=args.table_cap,
            socket_port=args.socket_port,
            ui_dir=args.ui_dir,
        )
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _check_port_free(config.host, config.port)
    _check_port_free(config.host, config.effective_socket_port)
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gateboard", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a circuit once and print indicator states")
    p_eval.add_argument("file", help=".lgc file, or - for stdin")
    p_eval.add_argument(
        "--set",
        action="append",
        default=[],
        metavar="NAME=0|1",
        help="override a switch before evaluating (repeatable)",
    )
    p_eval.add_argument(
        "--strict",
        action="store_true",
        help="exit 2 when the circuit has floating inputs or cycles",
    )
    p_eval.set_defaults(func=cmd_eval)

    p_table = sub.add_parser("table", help="print the truth table over all switches")
    p_table.add_argument("file", help=".lgc file, or - for stdin")
    p_table.add_argument("--format", choices=("text", "csv"), default="text")
    p_table.add_argument(
        "--cap",
        type=int,
        default=_default_cap(),
        help="refuse circuits with more switches than this",
    )
    p_table.set_defaults(func=cmd_table)

    p_check = sub.add_parser("check", help="report floating inputs and cycles")
    p_check.add_argument("file", help=".lgc file, or - for stdin")
    p_check.set_defaults(func=cmd_check)

    p_fmt = sub.add_parser("fmt", help="rewrite a circuit in canonical form")
    p_fmt.add_argument("file", help=".lgc file, or - for stdin")
    p_fmt.add_argument("--write", action="store_true", help="rewrite the file in place")
    p_fmt.set_defaults(func=cmd_fmt)

    p_serve = sub.add_parser("serve", help="run the editor service")
    p_serve.add_argument("--addr", metavar="HOST:PORT", help="HTTP listen address")
    p_serve.add_argument("--data-dir", help="directory for saved circuits")
    p_serve.add_argument("--table-cap", type=int, help="truth-table switch cap")
    p_serve.add_argument(
        "--socket-port",
        type=int,
        help="port for the line-based socket protocol (default: HTTP port + 1)",
    )
    p_serve.add_argument("--ui-dir", help="directory with the built web UI")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"gateboard: error: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
