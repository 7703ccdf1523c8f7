"""Exception hierarchy shared by all modules."""


class ToolkitError(Exception):
    """Base class for errors raised by this package."""


class InputError(ToolkitError, ValueError):
    """Malformed argument: vertex out of range, repeated vertex, bad path."""


class DomainError(ToolkitError, ValueError):
    """Parameters outside the range where the extremal theorem applies."""


class CapacityError(ToolkitError, ValueError):
    """Request exceeds a supported size limit."""


class Graph6Error(InputError):
    """Parse failure in a graph6 record. ``offset`` is the 0-based byte index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SearchLimitError(ToolkitError, RuntimeError):
    """Geodesic enumeration exceeded its configured cap."""


class CharacterizationError(ToolkitError, RuntimeError):
    """A graph of maximum size admitted no structural certificate.

    The characterization theorem says this cannot happen, so this is raised
    instead of returning a soft negative.
    """
