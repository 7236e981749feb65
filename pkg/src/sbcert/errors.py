"""Exception types raised across the package."""


class SbcertError(Exception):
    """Base class for every error this package raises deliberately."""


class NotPrime(SbcertError):
    pass


class WrongResidue(SbcertError):
    pass


class BadResidue(SbcertError):
    pass


class DivisionByZero(SbcertError, ZeroDivisionError):
    pass


class SingularMatrix(SbcertError):
    pass


class SingularBasis(SbcertError):
    """The fixed-field basis matrix failed to invert; internal invariant violation."""


class ParamMismatch(SbcertError):
    pass


class NotInvertible(SbcertError):
    pass


class ZeroElement(SbcertError):
    pass


class CapExceeded(SbcertError):
    pass


class RelationFailure(SbcertError):
    pass


class IsoFailure(SbcertError):
    pass


class BoundTooLarge(SbcertError):
    pass


class RejectedOverride(SbcertError):
    pass
