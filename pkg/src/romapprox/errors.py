"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed instance text. Carries the 1-based line number."""

    def __init__(self, line, message):
        self.line = line
        super().__init__(f"line {line}: {message}")


class DomainError(ValueError):
    """An operation was asked about an item outside its contract."""


class LedgerError(RuntimeError):
    """Workspace meter misuse: releasing more than is held, or a body
    that finishes without returning the charge level to its entry value."""


class RefusalError(RuntimeError):
    """An exact solver was handed an instance above its size cap."""


class RoundLimitError(RuntimeError):
    """An iterative routine exceeded its guaranteed round bound; the
    input almost certainly violates the routine's structural precondition."""
