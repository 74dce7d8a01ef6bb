"""Exception types shared across the package."""


class HopfwordsError(Exception):
    """Base class for library errors."""


class ParseError(HopfwordsError):
    """Malformed textual input: polynomial, tensor, alphabet or JSON operand."""


class DomainError(HopfwordsError):
    """Operation applied outside its domain, e.g. alphabet mismatch, missing
    antipode, incompatible dimensions."""


class InconclusiveError(HopfwordsError):
    """The Hankel rank did not stabilize within the explored window; the data
    neither confirms nor refutes recognizability at this exploration length."""


class InternalInvariantError(HopfwordsError):
    """A condition that is guaranteed for well-formed inputs failed."""
