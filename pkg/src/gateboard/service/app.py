"""HTTP and socket front ends over the session manager.

REST carries everything a client needs; the socket protocol is a lower
overhead alternative for interactive clients. Both speak the same
command payloads and both answer with a full state snapshot, so a
client can treat every response as the new truth.

Socket framing is one JSON object per line (newline-delimited, UTF-8):

    {"session": "...", "seq": 1, "command": {"type": "add_gate", ...}}

answered by

    {"seq": 1, "event": {...}, "state": {...}}

or, when the request cannot be applied,

    {"seq": 1, "error": {"kind": "...", "message": "..."}}
"""

from __future__ import annotations

import asyncio
import json
from contextlib import asynccontextmanager
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import ValidationError

from ..core import CircuitError
from ..netlist import ParseError
from .config import ServiceConfig
from .manager import (
    BadName,
    OutOfOrder,
    SessionManager,
    UnknownName,
    UnknownSession,
)
from .models import (
    CircuitsList,
    CommandRequest,
    CommandResult,
    LoadResult,
    NamedCircuit,
    SaveResult,
    SessionInfo,
    SocketRequest,
    event_to_wire,
)


def _error_body(kind: str, message: str, **extra) -> dict:
    return {"error": {"kind": kind, "message": message, **extra}}


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    manager = SessionManager(config.data_dir, config.table_cap)

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        server = await asyncio.start_server(
            lambda reader, writer: _serve_connection(manager, reader, writer),
            host=config.host,
            port=config.effective_socket_port,
        )
        app.state.socket_port = server.sockets[0].getsockname()[1]
        try:
            yield
        finally:
            server.close()
            await server.wait_closed()

    app = FastAPI(title="gateboard", lifespan=lifespan)
    app.state.manager = manager
    app.state.config = config

    @app.exception_handler(UnknownSession)
    async def _unknown_session(request: Request, exc: UnknownSession):
        return JSONResponse(_error_body("unknown_session", str(exc)), status_code=404)

    @app.exception_handler(UnknownName)
    async def _unknown_name(request: Request, exc: UnknownName):
        return JSONResponse(_error_body("unknown_name", str(exc)), status_code=404)

    @app.exception_handler(OutOfOrder)
    async def _out_of_order(request: Request, exc: OutOfOrder):
        return JSONResponse(
            _error_body("out_of_order", str(exc), expected=exc.expected),
            status_code=409,
        )

    @app.exception_handler(BadName)
    async def _bad_name(request: Request, exc: BadName):
        return JSONResponse(_error_body("bad_name", str(exc)), status_code=400)

    @app.exception_handler(ParseError)
    async def _parse_error(request: Request, exc: ParseError):
        return JSONResponse(
            _error_body(
                "parse_error",
                str(exc),
                line=exc.line,
                column=exc.column,
                detail=exc.kind.value,
            ),
            status_code=400,
        )

    @app.exception_handler(CircuitError)
    async def _circuit_error(request: Request, exc: CircuitError):
        return JSONResponse(_error_body("circuit_error", str(exc)), status_code=400)

    @app.post("/session", response_model=SessionInfo)
    def create_session():
        session_id, snapshot = manager.create_session()
        return SessionInfo(session=session_id, seq=0, state=snapshot)

    @app.get("/session/{session_id}/state", response_model=SessionInfo)
    def get_state(session_id: str):
        seq, snapshot = manager.state(session_id)
        return SessionInfo(session=session_id, seq=seq, state=snapshot)

    @app.post("/session/{session_id}/command", response_model=CommandResult)
    def post_command(session_id: str, request: CommandRequest):
        event, snapshot = manager.dispatch(
            session_id, request.seq, request.command.to_command()
        )
        return CommandResult(seq=request.seq, event=event_to_wire(event), state=snapshot)

    @app.get("/session/{session_id}/circuit", response_class=PlainTextResponse)
    def get_circuit(session_id: str):
        return manager.circuit_text(session_id)

    @app.put("/session/{session_id}/circuit", response_model=LoadResult)
    async def put_circuit(session_id: str, request: Request):
        try:
            text = (await request.body()).decode("utf-8")
        except UnicodeDecodeError:
            return JSONResponse(
                _error_body("bad_encoding", "circuit body must be UTF-8 text"),
                status_code=400,
            )
        event, snapshot = manager.load_text(session_id, text)
        return LoadResult(event=event_to_wire(event), state=snapshot)

    @app.post("/session/{session_id}/circuit/save", response_model=SaveResult)
    def save_circuit(session_id: str, body: NamedCircuit):
        manager.save_named(session_id, body.name)
        return SaveResult(saved=body.name)

    @app.post("/session/{session_id}/circuit/load", response_model=LoadResult)
    def load_circuit(session_id: str, body: NamedCircuit):
        event, snapshot = manager.load_named(session_id, body.name)
        return LoadResult(event=event_to_wire(event), state=snapshot)

    @app.get("/circuits", response_model=CircuitsList)
    def list_circuits():
        return CircuitsList(circuits=manager.list_named())

    @app.get("/session/{session_id}/table")
    def get_table(session_id: str):
        return manager.table(session_id)

    @app.delete("/session/{session_id}", status_code=204)
    def close_session(session_id: str):
        manager.close_session(session_id)

    if config.ui_dir and Path(config.ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app


def _protocol_answer(manager: SessionManager, raw: bytes) -> dict:
    """Turn one request line into one response object. Never raises."""
    try:
        payload = json.loads(raw)
    except ValueError:
        return _error_body("bad_message", "request is not valid JSON")
    seq = payload.get("seq") if isinstance(payload, dict) else None
    if not isinstance(seq, int):
        seq = None
    try:
        request = SocketRequest.model_validate(payload)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        message = f"{where}: {first['msg']}" if where else first["msg"]
        return {"seq": seq, **_error_body("bad_message", message)}
    try:
        event, snapshot = manager.dispatch(
            request.session, request.seq, request.command.to_command()
        )
    except UnknownSession as exc:
        return {"seq": request.seq, **_error_body("unknown_session", str(exc))}
    except OutOfOrder as exc:
        return {
            "seq": request.seq,
            **_error_body("out_of_order", str(exc), expected=exc.expected),
        }
    return {"seq": request.seq, "event": event_to_wire(event), "state": snapshot}


async def _serve_connection(
    manager: SessionManager,
    reader: asyncio.StreamReader,
    writer: asyncio.StreamWriter,
) -> None:
    try:
        while True:
            line = await reader.readline()
            if not line:
                break
            if not line.strip():
                continue
            answer = _protocol_answer(manager, line)
            writer.write(json.dumps(answer).encode("utf-8") + b"\n")
            await writer.drain()
    except (ConnectionResetError, BrokenPipeError, ValueError):
        # ValueError covers a line that overruns the stream buffer limit.
        pass
    finally:
        writer.close()
        try:
            await writer.wait_closed()
        except (ConnectionResetError, BrokenPipeError):
            pass
