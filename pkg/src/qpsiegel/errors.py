"""Exception hierarchy shared by the formula and oracle modules."""


class QpsiegelError(ValueError):
    """Base class; ``kind`` is the name reported by the CLI."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class ZeroConstantTerm(QpsiegelError):
    pass


class InvalidCurve(QpsiegelError):
    pass


class InvalidCounts(InvalidCurve):
    pass


class NegativeCount(InvalidCurve):
    pass


class NonIntegerClassNumber(InvalidCurve):
    pass


class PoleError(QpsiegelError):
    pass


class RangeError(QpsiegelError):
    pass


class IntegralityError(QpsiegelError):
    """An exact value expected to be an integer was not."""


class TooLarge(QpsiegelError):
    """An enumeration would exceed its size guard."""


class RankMismatch(QpsiegelError):
    pass


class PointCountMismatch(QpsiegelError):
    pass


class OracleMismatch(QpsiegelError):
    """A brute-force census disagreed with the value it was checking."""
