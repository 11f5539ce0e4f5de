"""Exception types shared across the package."""


class NatIntError(Exception):
    """Base class for every error raised by this library."""


class DomainMismatch(NatIntError):
    """Two values from different scalar domains were combined."""


class FlavorMismatch(NatIntError):
    """Two intervals with different boundary flavors were combined."""


class NotARing(NatIntError):
    """An additive-inverse operation was requested in a domain without one."""


class FuzzyRangeOverflow(NatIntError):
    """A fuzzy-unit operation produced a value outside [0, 1]."""


class DivisorComponentZero(NatIntError):
    """Interval division with a non-invertible divisor component."""


class UnorderedDomain(NatIntError):
    """min/max or a comparison was requested in a domain without order."""


class InfiniteDomain(NatIntError):
    """Enumeration was requested for an infinite domain."""


class TooLarge(NatIntError):
    """A carrier or search exceeds the configured size bound."""


class MissingTable(NatIntError):
    """An axiom check needs an operation the structure does not carry."""


class NotIntervalCarrier(NatIntError):
    """An interval-only construction was applied to a non-interval carrier."""


class NotAnIdeal(NatIntError):
    """A quotient was requested over a subset that is not an ideal."""


class NotAField(NatIntError):
    """A vector-space computation was requested over a non-field domain."""


class ShapeMismatch(NatIntError):
    """Matrix shapes are incompatible for the requested operation."""


class ModulusMismatch(NatIntError):
    """Two polynomials with different cyclic moduli were combined."""


class ParseError(NatIntError):
    """Malformed input text.  Records position and expected tokens."""

    def __init__(self, message, text=None, pos=None, expected=None):
        self.message = message
        self.text = text
        self.pos = pos
        self.expected = expected
        parts = [message]
        if pos is not None:
            parts.append(f"at position {pos}")
        if expected:
            parts.append("expected " + " or ".join(expected))
        super().__init__(": ".join(parts) if len(parts) > 1 else message)
