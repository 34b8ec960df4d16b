"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class ZeckitError(ValueError):
    pass


class IndexCapExceeded(ZeckitError):
    pass


class NegativeIndexUnsupported(ZeckitError):
    pass


class SpecNotSecondOrder(ZeckitError):
    pass


class FamilyNotSecondOrder(SpecNotSecondOrder):
    pass


class SpecNotTilingConvention(ZeckitError):
    pass


class NotAUnit(ZeckitError):
    pass


class OddParameter(ZeckitError):
    pass


class NonPositiveInput(ZeckitError):
    pass


class InvalidRepresentation(ZeckitError):
    pass


class BoardTooLarge(ZeckitError):
    pass


class CellOutOfRange(ZeckitError):
    pass


class RangeBelowMinN(ZeckitError):
    pass


class OddR(ZeckitError):
    pass


class TNotOne(ZeckitError):
    pass


class WindowTooLarge(ZeckitError):
    pass


class OddPellLucasValue(ZeckitError):
    pass
