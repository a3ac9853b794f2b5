"""Exception types raised across the package.

Every error derives from :class:`WittKnotsError` so callers (the CLI in
particular) can catch the whole family; each also derives from the builtin
exception that best describes it.
"""


class WittKnotsError(Exception):
    """Base class for all package errors."""


class ZeroInput(WittKnotsError, ValueError):
    pass


class NotPrime(WittKnotsError, ValueError):
    pass


class NotCoprime(WittKnotsError, ValueError):
    pass


class NotSymmetric(WittKnotsError, ValueError):
    pass


class InvalidKnot(WittKnotsError, ValueError):
    """Twist parameters that do not describe a pretzel knot."""


class NotAKnot(InvalidKnot):
    """The parameters describe a link with more than one component."""


class TooShort(InvalidKnot):
    pass


class ZeroTwist(InvalidKnot):
    pass


class EvenStabilizer(InvalidKnot):
    pass


class NotAdmissible(WittKnotsError, ValueError):
    """A Seifert matrix V with det(V - V^T) != +-1, or a non-square matrix."""


class OddSize(WittKnotsError, ValueError):
    pass


class NearSingular(WittKnotsError, ArithmeticError):
    """omega is numerically a root of the Alexander polynomial."""


class NotOnCircle(WittKnotsError, ValueError):
    pass


class BadMatrixFile(WittKnotsError, ValueError):
    """A Seifert matrix file that cannot be read or parsed."""
