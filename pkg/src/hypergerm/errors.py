"""Error taxonomy shared by every module.

Each class carries a ``name`` that the CLI prints verbatim, so the
strings here are part of the command-line contract.
"""


class HypergermError(Exception):
    name = "HypergermError"


class DivisionByZero(HypergermError, ZeroDivisionError):
    name = "DivisionByZero"


class InfiniteArgument(HypergermError, ValueError):
    name = "InfiniteArgument"


class NonPositiveBase(HypergermError, ValueError):
    name = "NonPositiveBase"


class UnsupportedForm(HypergermError, ValueError):
    name = "UnsupportedForm"


class CapExceeded(HypergermError, OverflowError):
    name = "CapExceeded"


class OutOfRange(HypergermError, ValueError):
    name = "OutOfRange"


class IoError(HypergermError, OSError):
    name = "IoError"


class NotationError(HypergermError, ValueError):
    """Malformed input text. ``position`` is a 0-based column."""

    name = "SyntaxError"

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position}")

    def pointer(self):
        """Two-line caret diagram of where parsing stopped."""
        return f"{self.text}\n{' ' * self.position}^"
