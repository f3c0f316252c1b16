"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class LabError(Exception):
    exit_code = 3


class InvalidInput(LabError):
    """Malformed or mathematically invalid input (exit code 3)."""

    exit_code = 3


class CapExceeded(LabError):
    """A configured size cap was hit (exit code 4)."""

    exit_code = 4


class NotAPermutation(InvalidInput):
    pass


class InvalidGroupTable(InvalidInput):
    pass


class UnknownFamily(InvalidInput):
    pass


class ParameterOutOfRange(InvalidInput):
    pass


class ParseError(InvalidInput):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotNormal(InvalidInput):
    pass


class NotASubgroup(InvalidInput):
    pass


class GroupIsAbelian(InvalidInput):
    pass


class NotMeetClosed(InvalidInput):
    pass


class NoUniqueBound(InvalidInput):
    pass


class NotComparable(InvalidInput):
    pass


class ClosureTooLarge(CapExceeded):
    pass


class OrderCapExceeded(CapExceeded):
    pass
