"""Exception types shared across the package."""


class ExtremalDigraphError(Exception):
    """Base class for all errors raised by this package."""


class LoopArc(ExtremalDigraphError):
    """An arc with equal endpoints was supplied (loops are not modelled)."""


class OutOfRange(ExtremalDigraphError):
    """An arc endpoint lies outside 1..n."""


class DuplicateArc(ExtremalDigraphError):
    """The same ordered pair was supplied twice."""


class ArcPresent(ExtremalDigraphError):
    """The arc to be added already exists."""


class InvalidSpec(ExtremalDigraphError):
    """A family specification violates its invariants."""


class CyclicHertz(InvalidSpec):
    """A blow-up was requested over a non-acyclic Hertz graph."""


class SizeMismatch(InvalidSpec):
    """Block size list does not match the Hertz graph's vertex count."""


class ZeroSize(InvalidSpec):
    """A blow-up block size is smaller than one."""


class InfiniteInvariant(ExtremalDigraphError):
    """Maximality is undefined for an infinite invariant value."""


class UnsupportedInvariant(ExtremalDigraphError):
    """No maximality theory is available for this invariant."""


class DomainError(ExtremalDigraphError):
    """Formula arguments lie outside the formula's validity domain."""


class TooLarge(ExtremalDigraphError):
    """The request exceeds an enumeration or canonicalization cap."""


class EmptyPredicate(ExtremalDigraphError):
    """No enumerated digraph satisfies the predicate."""


class UnknownScenario(ExtremalDigraphError):
    """The named verification scenario does not exist."""


class ParseError(ExtremalDigraphError):
    """A digraph document could not be parsed."""

    def __init__(self, message, line=None, position=None):
        detail = message
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line
        self.position = position
