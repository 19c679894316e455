"""Truncated formal Laurent series in q with exact integer coefficients.

A :class:`Series` stores the coefficients of ``q**base .. q**(order-1)``.
Exponents below ``base`` are zero; exponents at or above ``order`` are
unknown.  Every operation returns the largest window it can prove exact.
"""

from __future__ import annotations

import functools
import operator
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    ArityError,
    CoefficientRangeError,
    InvalidOrderError,
    InvalidResidueError,
    NotInvertibleError,
)

__all__ = [
    "Series",
    "Comparison",
    "make_monomial",
    "add",
    "sub",
    "mul",
    "inverse",
    "dissect",
    "interleave",
    "shift",
    "scale",
    "coeff",
    "is_zero",
    "equal_up_to",
    "KERNELS",
    "set_kernel",
]


# ---------------------------------------------------------------------------
# convolution kernels: (a, b, n) -> first n coefficients of a*b

def schoolbook(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    if len(a) > len(b):
        a, b = b, a
    for i, x in enumerate(a):
        if i >= n:
            break
        if not x:
            continue
        m = min(len(b), n - i)
        seg = out[i : i + m]
        out[i : i + m] = [s + x * y for s, y in zip(seg, b)]
    return out


def _pack(values: Sequence[int], width: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in values), "little")


def _unpack(packed: int, width: int, n: int) -> list[int]:
    raw = packed.to_bytes(width * n + width, "little")
    return [int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(n)]


def kronecker(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """Multiply by packing coefficients into one big integer per operand.

    Signed inputs are split into nonnegative halves so every packed slot is
    nonnegative; the slot width bounds ``2 * min(len) * max|a| * max|b|``.
    """
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b:
        return [0] * n
    ma = max(map(abs, a))
    mb = max(map(abs, b))
    if not ma or not mb:
        return [0] * n
    bits = ma.bit_length() + mb.bit_length() + min(len(a), len(b)).bit_length() + 2
    width = (bits + 7) // 8
    ap = _pack([x if x > 0 else 0 for x in a], width)
    an = _pack([-x if x < 0 else 0 for x in a], width)
    bp = _pack([x if x > 0 else 0 for x in b], width)
    bn = _pack([-x if x < 0 else 0 for x in b], width)
    span = min(n, len(a) + len(b) - 1)
    mask = (1 << (8 * width * span)) - 1
    plus = (ap * bp + an * bn) & mask
    minus = (ap * bn + an * bp) & mask
    out = [p - q for p, q in zip(_unpack(plus, width, span), _unpack(minus, width, span))]
    out.extend([0] * (n - span))
    return out


def _auto(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    if min(len(a), len(b), n) < 48:
        return schoolbook(a, b, n)
    return kronecker(a, b, n)


KERNELS: dict[str, Callable[[Sequence[int], Sequence[int], int], list[int]]] = {
    "auto": _auto,
    "schoolbook": schoolbook,
    "kronecker": kronecker,
}
_kernel = _auto


def set_kernel(name: str) -> None:
    """Select the convolution kernel used by :func:`mul` (``auto`` by default)."""
    global _kernel
    _kernel = KERNELS[name]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Comparison:
    """Outcome of :func:`equal_up_to`: the window ``[start, stop)`` that was compared."""

    equal: bool
    start: int
    stop: int
    first_mismatch: int | None = None

    def __bool__(self) -> bool:
        return self.equal


@dataclass(frozen=True, eq=False)
class Series:
    coeffs: tuple[int, ...]
    base: int = 0

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int, base: int = 0) -> "Series":
        if order < base:
            raise InvalidOrderError(f"order {order} below base {base}")
        return cls((0,) * (order - base), base)

    @classmethod
    def one(cls, order: int) -> "Series":
        return make_monomial(1, 0, order)

    @classmethod
    def from_terms(cls, terms: dict[int, int], order: int, base: int | None = None) -> "Series":
        """Build from an ``{exponent: coefficient}`` mapping; terms at or above ``order`` are dropped."""
        if base is None:
            base = min([e for e in terms if e < order], default=0)
            base = min(base, 0)
        out = [0] * (order - base)
        for e, c in terms.items():
            if base <= e < order:
                out[e - base] += c
            elif e < base:
                raise InvalidOrderError(f"exponent {e} below base {base}")
        return cls(tuple(out), base)

    # -- basic accessors --------------------------------------------------

    @property
    def order(self) -> int:
        return self.base + len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def coeff(self, e: int) -> int:
        """Coefficient of ``q**e``; zero below ``base``, an error at or above ``order``."""
        if e >= self.order:
            raise CoefficientRangeError(f"q^{e} is beyond the truncation order {self.order}")
        if e < self.base:
            return 0
        return self.coeffs[e - self.base]

    __getitem__ = coeff

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` for the nonzero known terms."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.base + i, c

    def to_list(self, start: int = 0, stop: int | None = None) -> list[int]:
        stop = self.order if stop is None else stop
        return [self.coeff(e) for e in range(start, stop)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Smallest exponent with nonzero coefficient, or None for a zero series."""
        for e, _ in self.items():
            return e
        return None

    # -- reshaping ---------------------------------------------------------

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        if order < self.base:
            return Series((), order)
        return Series(self.coeffs[: order - self.base], self.base)

    def rebase(self, base: int) -> "Series":
        """Same series stored from ``base`` (which must not drop nonzero terms)."""
        if base == self.base:
            return self
        if base < self.base:
            return Series((0,) * (self.base - base) + self.coeffs, base)
        drop = self.coeffs[: base - self.base]
        if any(drop):
            raise InvalidOrderError("rebase would discard nonzero coefficients")
        if base > self.order:
            raise InvalidOrderError("rebase beyond the truncation order")
        return Series(self.coeffs[base - self.base :], base)

    def normalized(self) -> "Series":
        """Strip leading zero coefficients."""
        v = self.valuation()
        return Series((), self.order) if v is None else self.rebase(v)

    def shift(self, k: int) -> "Series":
        """Multiply by ``q**k``."""
        return Series(self.coeffs, self.base + k)

    def scale(self, c: int) -> "Series":
        return Series(tuple(c * x for x in self.coeffs), self.base)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Series":
        return self.scale(-1)

    def __add__(self, other):
        if isinstance(other, int):
            other = make_monomial(other, 0, self.order) if self.order > 0 else Series((), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        base = min(self.base, other.base)
        order = min(self.order, other.order)
        if order < base:
            return Series((), order)
        out = [0] * (order - base)
        for s in (self, other):
            for i, c in enumerate(s.coeffs[: max(0, order - s.base)]):
                out[s.base - base + i] += c
        return Series(tuple(out), base)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Series)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        n = min(len(self), len(other))
        return Series(tuple(_kernel(self.coeffs, other.coeffs, n)), self.base + other.base)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return self.inverse() ** (-k)
        result = make_monomial(1, 0, len(self)) if len(self) else Series((), 0)
        sq = self
        while k:
            if k & 1:
                result = result * sq
            k >>= 1
            if k:
                sq = sq * sq
        return result

    def inverse(self) -> "Series":
        """Multiplicative inverse; the lowest nonzero coefficient must be +1 or -1."""
        v = self.valuation()
        if v is None:
            raise NotInvertibleError("the zero series has no inverse")
        f = self.coeffs[v - self.base :]
        lead = f[0]
        if lead not in (1, -1):
            raise NotInvertibleError(f"lowest coefficient {lead} is not a unit")
        n = len(f)
        # Newton iteration g <- g(2 - f g), doubling the exact precision each step
        g = [lead]
        prec = 1
        while prec < n:
            prec = min(2 * prec, n)
            fg = _kernel(f, g, prec)
            fg = [-x for x in fg]
            fg[0] += 2
            g = _kernel(g, fg, prec)
        return Series(tuple(g), -v)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return NotImplemented

    def dissect(self, m: int, r: int) -> "Series":
        """Series whose coefficient at n is this series' coefficient at ``m*n + r``."""
        if m < 1:
            raise InvalidResidueError(f"modulus must be positive, got {m}")
        if not 0 <= r < m:
            raise InvalidResidueError(f"residue {r} is not in [0, {m})")
        lo = -((r - self.base) // m)
        hi = -((r - self.order) // m)
        return Series(tuple(self.coeff(m * n + r) for n in range(lo, hi)), lo)

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = make_monomial(other, 0, self.order) if self.order > 0 else Series((), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        return bool(equal_up_to(self, other))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Series({self})"

    def __str__(self) -> str:
        terms = []
        for e, c in self.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            terms.append(("- " if c < 0 else "+ ") + body)
        if len(terms) > 12:
            terms = terms[:12] + ["+ ..."]
        text = " ".join(terms)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:] if text else "0"
        return f"{text} + O(q^{self.order})"


# ---------------------------------------------------------------------------
# functional surface


def make_monomial(c: int, e: int, order: int) -> Series:
    """``c * q**e`` known through ``q**(order-1)``."""
    if e >= order:
        raise InvalidOrderError(f"exponent {e} is not below order {order}")
    base = min(e, 0)
    out = [0] * (order - base)
    out[e - base] = c
    return Series(tuple(out), base)


def add(s: Series, t: Series) -> Series:
    return s + t


def sub(s: Series, t: Series) -> Series:
    return s - t


def mul(s: Series, t: Series) -> Series:
    return s * t


def inverse(s: Series) -> Series:
    return s.inverse()


def dissect(s: Series, m: int, r: int) -> Series:
    return s.dissect(m, r)


def shift(s: Series, k: int) -> Series:
    return s.shift(k)


def scale(s: Series, c: int) -> Series:
    return s.scale(c)


def coeff(s: Series, e: int) -> int:
    return s.coeff(e)


def is_zero(s: Series) -> bool:
    return s.is_zero()


def interleave(parts: Sequence[Series], m: int) -> Series:
    """Inverse of dissection: coefficient ``m*n + r`` comes from ``parts[r]`` at ``n``."""
    if m < 1 or len(parts) != m:
        raise ArityError(f"expected {m} parts, got {len(parts)}")
    base = min(m * p.base + r for r, p in enumerate(parts))
    order = min(m * p.order + r for r, p in enumerate(parts))
    if order < base:
        return Series((), order)
    return Series(tuple(parts[e % m].coeff(e // m) for e in range(base, order)), base)


def equal_up_to(s: Series, t: Series, order: int | None = None) -> Comparison:
    """Compare on the shared known window, optionally capped at ``order``."""
    start = min(s.base, t.base)
    stop = min(s.order, t.order)
    if order is not None:
        stop = min(stop, order)
    for e in range(start, stop):
        if s.coeff(e) != t.coeff(e):
            return Comparison(False, start, stop, e)
    return Comparison(True, start, max(start, stop))


def product(factors: Iterable[Series], order: int) -> Series:
    """Multiply series left to right, starting from ``1 + O(q^order)``."""
    return functools.reduce(operator.mul, factors, Series.one(order))
