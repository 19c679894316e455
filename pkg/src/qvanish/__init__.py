"""Exact truncated q-series and a checker for vanishing-coefficient theorems."""

from .dsl import ParseError, format_expr, parse
from .errors import (
    ArityError,
    CoefficientRangeError,
    DivergentParametersError,
    InvalidCaseError,
    InvalidOrderError,
    InvalidResidueError,
    NotInvertibleError,
    QSeriesError,
)
from .qproducts import Factor, ProductExpr, eta_like, expand, pochhammer
from .series import Series, dissect, equal_up_to, interleave, make_monomial

__version__ = "0.1.0"
