"""Exception hierarchy shared by all modules."""


class CbmgError(Exception):
    pass


class InputError(CbmgError, ValueError):
    """Bad argument: unknown vertex, malformed file, infeasible parameters."""


class ParseError(InputError):
    """Malformed Newick / table / graph text. ``position`` is a 0-based offset or line."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class CapacityError(CbmgError):
    """An exact exponential search was asked to run beyond its size cap."""


class PreconditionFailed(CbmgError):
    pass


class InvariantError(CbmgError):
    """An internal invariant that should be impossible to break was broken."""
