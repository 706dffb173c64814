"""Exception hierarchy. Every error the library raises derives from GrowthLabError."""


class GrowthLabError(Exception):
    """Base class for all library errors."""


# -- field construction / element arithmetic ---------------------------------

class NotMonic(GrowthLabError):
    pass


class Reducible(GrowthLabError):
    pass


class NotTotallyReal(GrowthLabError):
    pass


class MixedFields(GrowthLabError):
    pass


class IndexOutOfRange(GrowthLabError):
    pass


class UnsupportedDegree(GrowthLabError):
    pass


# -- enumeration and constructions --------------------------------------------

class RadiusTooLarge(GrowthLabError):
    pass


class SeparationViolation(GrowthLabError):
    """A unit other than +-1 had every embedding inside (1/phi, phi)."""


class PredictionViolation(GrowthLabError):
    """A guaranteed structural property failed; signals an arithmetic bug."""


class EnvelopeViolation(GrowthLabError):
    """An element escaped a containment that holds by construction."""


class IdentityViolation(GrowthLabError):
    """An unconditional counting identity failed; signals a bug."""


# -- set calculus --------------------------------------------------------------

class MixedAmbient(GrowthLabError):
    pass


class CapExceeded(GrowthLabError):
    pass


class TooSmall(GrowthLabError):
    pass


class BudgetExceeded(GrowthLabError):
    pass


# -- function fields ------------------------------------------------------------

class DegreeTooSmall(GrowthLabError):
    pass


class PivotNotInP(GrowthLabError):
    pass


# -- numeric pipeline -----------------------------------------------------------

class DomainError(GrowthLabError):
    pass


class AlphaTooSmall(GrowthLabError):
    pass


class NoFeasiblePoint(GrowthLabError):
    pass
