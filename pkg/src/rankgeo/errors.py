"""Exception hierarchy shared by all modules."""


class RankGeoError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(RankGeoError, ValueError):
    pass


class ReducibleModulus(RankGeoError, ValueError):
    pass


class NoDefaultModulus(RankGeoError, LookupError):
    pass


class BudgetExceeded(RankGeoError):
    """An exhaustive enumeration would exceed the configured size cap."""


class DivisionByZero(RankGeoError, ZeroDivisionError):
    pass


class MixedContexts(RankGeoError, ValueError):
    """Operands were built over different field contexts."""


class LengthMismatch(RankGeoError, ValueError):
    pass


class ZeroVector(RankGeoError, ValueError):
    """A projective operation received the zero vector."""


ZeroCovector = ZeroVector


class DependentBasis(RankGeoError, ValueError):
    pass


class WrongScalarField(RankGeoError, ValueError):
    pass


class CommonKernelNontrivial(RankGeoError, ValueError):
    pass


class NoSkewComplement(RankGeoError):
    """Internal consistency failure: no complement skew from the dual was found."""


class NotProper(RankGeoError, ValueError):
    """The linear set consists of a single point."""


class InexactDivision(RankGeoError, ArithmeticError):
    pass


class NonPolynomialResult(RankGeoError, ArithmeticError):
    pass


class NegativeCount(RankGeoError, ArithmeticError):
    """The MacWilliams recursion produced an impossible (negative) count."""


class PolySyntaxError(RankGeoError, ValueError):
    pass


class ExponentOutOfRange(RankGeoError, ValueError):
    pass


class UnknownSymbol(RankGeoError, ValueError):
    pass
