"""The Rogers-Ramanujan quotient R(q) = (q,q^4;q^5)_inf / (q^2,q^3;q^5)_inf
and two identities relating R(q), R(q^2) and eta quotients.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import parse
from .qproducts import eta_like, expand
from .series import Series

__all__ = ["RRContext", "rq", "rq2", "bb_residual_1", "bb_residual_2"]

R_Q = parse("(q,q^4;q^5)/(q^2,q^3;q^5)")
# R(q^2), expanded from its own modulus-10 products
R_Q2 = parse("(q^2,q^8;q^10)/(q^4,q^6;q^10)")


@dataclass(frozen=True)
class RRContext:
    order: int
    r1: Series
    r2: Series

    @classmethod
    def build(cls, order: int) -> "RRContext":
        return cls(order, rq(order), rq2(order))


def rq(order: int) -> Series:
    return expand(R_Q, order)


def rq2(order: int) -> Series:
    return expand(R_Q2, order)


def bb_residual_1(order: int) -> Series:
    """1/(R(q)R(q^2)^2) - q^2 R(q)R(q^2)^2 - f_2 f_5^5 / (f_1 f_10^5)."""
    if order < 3:
        raise ValueError("order must be at least 3")
    ctx = RRContext.build(order)
    x = ctx.r1 * ctx.r2 * ctx.r2
    lhs = x.inverse() - x.shift(2)
    rhs = eta_like(2, order) * eta_like(5, order) ** 5 * (eta_like(1, order) * eta_like(10, order) ** 5).inverse()
    return (lhs - rhs).truncate(order)


def bb_residual_2(order: int, as_printed: bool = False) -> Series:
    """R(q^2)/R(q)^2 - R(q)^2/R(q^2) - 4q f_10^5 f_1 / (f_5^5 f_2).

    With ``as_printed=True`` the denominator uses f_5 instead of f_5^5; that
    form is not an identity (the residual is 16q^6 + ...), and only the f_5^5
    form gives c - d = 4q f_10^4 / f_5^4 for the c- and d-series.
    """
    if order < 3:
        raise ValueError("order must be at least 3")
    ctx = RRContext.build(order)
    x = ctx.r2 * (ctx.r1 * ctx.r1).inverse()
    lhs = x - x.inverse()
    f5 = eta_like(5, order) ** (1 if as_printed else 5)
    rhs = eta_like(10, order) ** 5 * eta_like(1, order) * (f5 * eta_like(2, order)).inverse()
    return (lhs - rhs.scale(4).shift(1)).truncate(order)
