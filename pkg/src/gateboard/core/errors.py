"""Exceptions raised by circuit operations."""


class CircuitError(Exception):
    """Base class for all circuit-level errors."""


class UnknownElement(CircuitError):
    pass


class BadPin(CircuitError):
    """Pin index out of range or wrong direction for the operation."""


class InputAlreadyDriven(CircuitError):
    """The target input pin already has a driver (single-driver rule)."""


class DuplicateConnection(CircuitError):
    pass


class UnknownConnection(CircuitError):
    pass


class NotASwitch(CircuitError):
    """Toggle requested on an element that is not a switch input."""


class ArityMismatch(CircuitError):
    """Gate function applied to the wrong number of inputs."""


class TooManyInputs(CircuitError):
    """Truth-table generation over more switches than the configured cap."""
