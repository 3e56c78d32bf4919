"""Exception types raised by the field, curve and oracle modules."""


class KloostermanError(Exception):
    """Base class for every error raised by this package."""


class ZeroInversion(KloostermanError, ZeroDivisionError):
    pass


class NoSolution(KloostermanError, ValueError):
    """An Artin-Schreier equation has no root in the field (nonzero trace)."""


class NonResidue(KloostermanError, ValueError):
    pass


class NotHalvable(KloostermanError, ValueError):
    pass


class NotThirdable(KloostermanError, ValueError):
    pass


class DegeneratePoint(KloostermanError, ValueError):
    """Thirding was asked of the identity or of a point with x = 0."""


class ZeroArgument(KloostermanError, ValueError):
    """The curve parameter a must be nonzero."""


class UnsupportedDegree(KloostermanError, ValueError):
    pass


class DegreeTooLarge(KloostermanError, ValueError):
    """An exhaustive computation was requested above its configured cap."""


class Exhausted(KloostermanError):
    """A random search ran out of trials without finding a zero."""

    def __init__(self, trials):
        super().__init__(f"no Kloosterman zero found in {trials} trials")
        self.trials = trials
