"""Exception hierarchy shared by every textdecepter module."""


class TextDecepterError(Exception):
    """Base class for all errors raised by this package."""


class EmptyDocument(TextDecepterError, ValueError):
    """Raised when a text is empty or contains only whitespace."""


class InvalidPosition(TextDecepterError, IndexError):
    """Raised when a substitution addresses a word position that does not exist."""


class FormatError(TextDecepterError, ValueError):
    """Raised when an input file does not follow its documented format.

    Args:
        message: human readable description.
        line: 1-based line number of the offending line, if known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownWord(TextDecepterError, KeyError):
    """Raised when a word is not a row of the similarity matrix."""

    def __str__(self):
        return f"word not in similarity matrix: {self.args[0]!r}"


class OracleUnavailable(TextDecepterError):
    """The victim could not be reached (after retries, if any)."""


class OracleProtocolError(TextDecepterError):
    """The victim answered with something that is not a valid label reply."""


class BudgetExhausted(TextDecepterError):
    """Raised by a budgeted oracle when no more queries are allowed."""


class EmptyCampaign(TextDecepterError, ValueError):
    """Raised when metrics are requested for zero attack results."""
