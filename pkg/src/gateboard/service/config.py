"""Service configuration. Flags win over environment variables.

Environment: GATEBOARD_ADDR, GATEBOARD_DATA_DIR, GATEBOARD_TABLE_CAP,
GATEBOARD_SOCKET_PORT, GATEBOARD_UI_DIR.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from ..core import DEFAULT_INPUT_CAP

ENV_PREFIX = "GATEBOARD_"
DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8345


def parse_addr(addr: str) -> tuple[str, int]:
    """Split ``host:port`` (bare ``:port`` means localhost)."""
    host, sep, port = addr.rpartition(":")
    if not sep or not port.isdigit():
        raise ValueError(f"address must look like host:port, got {addr!r}")
    return host or DEFAULT_HOST, int(port)


@dataclass
class ServiceConfig:
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    data_dir: Path = Path("gateboard-data")
    table_cap: int = DEFAULT_INPUT_CAP
    # None means "HTTP port + 1"; 0 asks the OS for an ephemeral port.
    socket_port: int | None = None
    ui_dir: Path | None = None

    @property
    def effective_socket_port(self) -> int:
        return self.port + 1 if self.socket_port is None else self.socket_port


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def load_config(
    addr: str | None = None,
    data_dir: str | None = None,
    table_cap: int | None = None,
    socket_port: int | None = None,
    ui_dir: str | None = None,
) -> ServiceConfig:
    """Resolve configuration: explicit argument, then env var, then default."""
    addr = addr or _env("ADDR") or f"{DEFAULT_HOST}:{DEFAULT_PORT}"
    host, port = parse_addr(addr)
    data_dir = data_dir or _env("DATA_DIR") or "gateboard-data"
    if table_cap is None:
        table_cap = int(_env("TABLE_CAP") or DEFAULT_INPUT_CAP)
    if socket_port is None and _env("SOCKET_PORT"):
        socket_port = int(_env("SOCKET_PORT"))
    ui_dir = ui_dir or _env("UI_DIR")
    if ui_dir is None and Path("frontend/dist/index.html").is_file():
        ui_dir = "frontend/dist"
    return ServiceConfig(
        host=host,
        port=port,
        data_dir=Path(data_dir),
        table_cap=table_cap,
        socket_port=socket_port,
        ui_dir=Path(ui_dir) if ui_dir else None,
    )
