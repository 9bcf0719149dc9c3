from .app import create_app
from .config import ServiceConfig, load_config, parse_addr
from .manager import BadName, OutOfOrder, SessionManager, UnknownName, UnknownSession

__all__ = [
    "BadName",
    "OutOfOrder",
    "ServiceConfig",
    "SessionManager",
    "UnknownName",
    "UnknownSession",
    "create_app",
    "load_config",
    "parse_addr",
]
