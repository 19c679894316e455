"""Exception types raised by the engine."""


class QSeriesError(Exception):
    """Base class for every error raised by qvanish."""


class InvalidOrderError(QSeriesError, ValueError):
    pass


class NotInvertibleError(QSeriesError, ArithmeticError):
    pass


class InvalidResidueError(QSeriesError, ValueError):
    pass


class ArityError(QSeriesError, ValueError):
    pass


class CoefficientRangeError(QSeriesError, IndexError):
    """Asked for a coefficient at or above the truncation order."""


class DivergentParametersError(QSeriesError, ValueError):
    """Theta parameters whose formal product ab does not have positive q-degree."""


class InvalidCaseError(QSeriesError, ValueError):
    """Theorem parameters outside the theorem's hypotheses."""
