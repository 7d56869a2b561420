"""Exception types shared across the package."""


class PnfkitError(Exception):
    """Base class for all pnfkit errors."""


class WordParseError(PnfkitError, ValueError):
    """Input text is not a valid binary word.

    ``position`` is the 1-based index of the first offending character.
    """

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position} (expected '0' or '1')")


class ScaleError(PnfkitError, ValueError):
    """An input exceeds a desk-scale guard.

    Guards keep worst-case runtimes bounded; pass ``unsafe_large=True``
    (or ``--unsafe-large`` on the CLI) to override.
    """


class ContractError(PnfkitError, ValueError):
    """A documented precondition of an operation was violated."""


class IndexFormatError(PnfkitError, ValueError):
    """A stored index file is malformed or fails its invariants."""
