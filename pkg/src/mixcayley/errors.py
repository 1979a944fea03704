"""Exception types shared across the package."""


class MixCayleyError(Exception):
    """Base class for all package errors."""


class StructuralError(MixCayleyError, ValueError):
    """Malformed input: wrong dimensions, mismatched rings, invalid group data."""


class PreconditionError(MixCayleyError, ValueError):
    """An operation was called outside the domain where it is defined."""


class GroupSpecError(MixCayleyError, ValueError):
    """A textual group or set expression could not be parsed or validated."""

    def __init__(self, reason, text="", position=None):
        self.reason = reason
        self.text = text
        self.position = position
        if position is None:
            msg = reason
        else:
            msg = f"{reason} at position {position}: {text!r}"
        super().__init__(msg)


class ConvergenceError(MixCayleyError, RuntimeError):
    """The numeric eigensolver did not converge."""


class RouteDisagreement(MixCayleyError):
    """Two verification routes returned different verdicts for the same set."""

    def __init__(self, record):
        self.record = record
        super().__init__(f"route disagreement: {record}")
