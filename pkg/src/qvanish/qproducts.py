"""Infinite q-products expanded as truncated series.

``Factor(sign, offset, modulus)`` stands for ``(a; q^modulus)_inf`` with
``a = sign * q^offset``, i.e. the product of ``1 - sign*q^(offset + k*modulus)``
over ``k >= 0``.  The sign is that of ``a`` as written, so ``(-q; q^5)``
has ``sign=-1`` and expands to ``(1+q)(1+q^6)...``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .series import Series

__all__ = ["Factor", "ProductExpr", "pochhammer", "expand", "eta_like"]


@dataclass(frozen=True, order=True)
class Factor:
    sign: int
    offset: int
    modulus: int
    multiplicity: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.offset < 0:
            raise ValueError(f"offset must be nonnegative, got {self.offset}")
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if self.multiplicity == 0:
            raise ValueError("multiplicity must be nonzero")

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.sign, self.offset, self.modulus)


@dataclass(frozen=True)
class ProductExpr:
    factors: tuple[Factor, ...] = ()

    def __post_init__(self):
        if not isinstance(self.factors, tuple):
            object.__setattr__(self, "factors", tuple(self.factors))

    @classmethod
    def of(cls, *groups: tuple[Iterable[int], int, int]) -> "ProductExpr":
        """Shorthand: ``ProductExpr.of(([-1, -4], 5, 1), ([1, 9], 10, 3))``.

        Each group lists signed offsets (negative means ``-q^|x|``), the modulus
        and the multiplicity.  A signed offset cannot express ``-q^0``; use
        :class:`Factor` directly for that.
        """
        factors = []
        for offsets, modulus, mult in groups:
            for x in offsets:
                factors.append(Factor(-1 if x < 0 else 1, abs(x), modulus, mult))
        return cls(tuple(factors))

    def normalize(self) -> "ProductExpr":
        """Merge factors with equal (sign, offset, modulus) and sort."""
        total: dict[tuple[int, int, int], int] = defaultdict(int)
        for f in self.factors:
            total[f.key] += f.multiplicity
        merged = [Factor(s, o, m, k) for (s, o, m), k in total.items() if k]
        return ProductExpr(tuple(sorted(merged, key=lambda f: (f.modulus, f.offset, -f.sign, f.multiplicity))))

    def __mul__(self, other: "ProductExpr") -> "ProductExpr":
        if not isinstance(other, ProductExpr):
            return NotImplemented
        return ProductExpr(self.factors + other.factors)

    def __truediv__(self, other: "ProductExpr") -> "ProductExpr":
        if not isinstance(other, ProductExpr):
            return NotImplemented
        return self * other ** -1

    def __pow__(self, k: int) -> "ProductExpr":
        if k == 0:
            return ProductExpr()
        return ProductExpr(tuple(Factor(f.sign, f.offset, f.modulus, f.multiplicity * k) for f in self.factors))

    def __str__(self) -> str:
        from .dsl import format_expr

        return format_expr(self)


def pochhammer(sign: int, offset: int, modulus: int, order: int) -> Series:
    """``(sign*q^offset; q^modulus)_inf`` through ``q^(order-1)``."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if modulus < 1:
        raise ValueError("modulus must be positive")
    c = [1] + [0] * (order - 1)
    top = 0  # degree bound of the partial product, caps the update window
    for e in range(offset, order, modulus):
        if e == 0:
            c = [(1 - sign) * x for x in c]
            continue
        top = min(order - 1, top + e)
        lo = c[: top - e + 1]
        c[e : top + 1] = [x - sign * y for x, y in zip(c[e : top + 1], lo)]
    return Series(tuple(c))


def _expand_positive(factors: Iterable[Factor], order: int) -> Series:
    out = Series.one(order)
    for f in factors:
        p = pochhammer(f.sign, f.offset, f.modulus, order)
        out = out * p ** abs(f.multiplicity)
    return out


def expand(expr: ProductExpr, order: int) -> Series:
    """Expand a product expression through ``q^(order-1)``.

    Numerator factors are multiplied out first; all reciprocal factors are
    expanded together and inverted once.
    """
    factors = expr.normalize().factors
    num = [f for f in factors if f.multiplicity > 0]
    den = [f for f in factors if f.multiplicity < 0]
    result = _expand_positive(num, order)
    if den:
        result = result * _expand_positive(den, order).inverse()
    return result


def eta_like(k: int, order: int) -> Series:
    """``f_k = (q^k; q^k)_inf``."""
    if k < 1:
        raise ValueError("k must be positive")
    return pochhammer(1, k, k, order)
