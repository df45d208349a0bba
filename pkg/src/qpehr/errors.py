"""Exception types shared across the package."""


class QPError(Exception):
    """Base class for errors raised by qpehr."""


class InputError(QPError, ValueError):
    """Malformed input: bad vertex index, bad word, unparsable text."""


class ParseError(InputError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at column {position + 1}"
        super().__init__(message)


class NotInvertibleError(QPError, ArithmeticError):
    """A character vanishes on some single-class quasi-poset."""


class CapacityError(QPError, RuntimeError):
    """The requested computation exceeds the supported size."""
