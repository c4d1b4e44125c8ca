"""Exception hierarchy shared by every module of the package."""


class AxialError(Exception):
    """Base class for all package errors."""


class DivisionByZero(AxialError, ZeroDivisionError):
    pass


class NonInvertible(AxialError):
    """A number-field element has no inverse (the modulus is reducible)."""


class NonEmbeddable(AxialError):
    """A rational cannot be mapped into a prime field."""


class MixedDomains(AxialError):
    pass


class UnsupportedCharacteristic(AxialError):
    pass


class ParseError(AxialError, ValueError):
    pass


class ClosureFailure(AxialError):
    """The structure-constant system could not be solved."""


class NotAnAxis(AxialError):
    pass


class NotAutomorphism(AxialError):
    pass


class Singular(AxialError):
    pass


class ReducibleMinpoly(AxialError):
    pass


class NotEnumerated(AxialError):
    pass


class ImproperIdeal(AxialError):
    pass


class UnknownItem(AxialError, KeyError):
    pass
