"""Ramanujan's theta function f(a, b) for monomial arguments, the Jacobi
triple product, the four classical product-of-theta identities and the
bivariate quadratic-exponent sums used in the 5-dissection arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DivergentParametersError, InvalidResidueError
from .qproducts import pochhammer
from .series import Series, make_monomial

__all__ = [
    "SignedMonomial",
    "ThetaParams",
    "QuadFormSum",
    "theta_series",
    "triple_product",
    "lemma1_residual",
    "quad_form_series",
    "residue_component",
    "section5_sums",
    "section5_components",
    "section5_cancellation",
]

# parity of k(k+1)/2 and k(k-1)/2, indexed by k mod 4
_TRI_PLUS = (0, 1, 1, 0)
_TRI_MINUS = (0, 0, 1, 1)


@dataclass(frozen=True)
class SignedMonomial:
    """``sign * q**exponent``."""

    sign: int = 1
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __mul__(self, other: "SignedMonomial") -> "SignedMonomial":
        return SignedMonomial(self.sign * other.sign, self.exponent + other.exponent)

    def __truediv__(self, other: "SignedMonomial") -> "SignedMonomial":
        return SignedMonomial(self.sign * other.sign, self.exponent - other.exponent)

    def __pow__(self, k: int) -> "SignedMonomial":
        return SignedMonomial(self.sign ** (k % 2), self.exponent * k)

    def __neg__(self) -> "SignedMonomial":
        return SignedMonomial(-self.sign, self.exponent)

    def __str__(self) -> str:
        body = "1" if self.exponent == 0 else ("q" if self.exponent == 1 else f"q^{self.exponent}")
        return ("-" if self.sign < 0 else "") + body


ONE = SignedMonomial(1, 0)


@dataclass(frozen=True)
class ThetaParams:
    a: SignedMonomial
    b: SignedMonomial

    def check(self) -> None:
        if self.a.exponent + self.b.exponent < 1:
            raise DivergentParametersError(
                f"f({self.a}, {self.b}): ab has q-degree {self.a.exponent + self.b.exponent} < 1"
            )

    def __str__(self) -> str:
        return f"f({self.a}, {self.b})"


def _quadratic_window(a2: int, a1: int, a0: int, bound: int) -> range:
    """Integers k with ``a2*k^2 + a1*k + a0 < bound`` lie inside the returned range (a2 > 0).

    The range is widened by one on each side; callers filter exactly.
    """
    # a2 k^2 + a1 k + (a0 - bound) < 0  <=>  |2 a2 k + a1| < sqrt(disc)
    disc = a1 * a1 - 4 * a2 * (a0 - bound)
    if disc < 0:
        return range(0)
    root = math.isqrt(disc) + 1
    lo = (-a1 - root) // (2 * a2) - 1
    hi = (-a1 + root) // (2 * a2) + 1
    return range(lo, hi + 1)


def _theta_terms(p: ThetaParams, order: int) -> Iterator[tuple[int, int]]:
    x, y = p.a.exponent, p.b.exponent
    s, d = x + y, x - y
    # exponent(k) = (s k^2 + d k) / 2
    for k in _quadratic_window(s, d, 0, 2 * order):
        e = (s * k * k + d * k) // 2
        if e >= order:
            continue
        sign = 1
        if p.a.sign < 0 and _TRI_PLUS[k % 4]:
            sign = -sign
        if p.b.sign < 0 and _TRI_MINUS[k % 4]:
            sign = -sign
        yield e, sign


def theta_min_exponent(p: ThetaParams) -> int:
    """Lowest exponent occurring in f(a, b) (never positive: k = 0 gives q^0)."""
    p.check()
    x, y = p.a.exponent, p.b.exponent
    s, d = x + y, x - y
    v = -d // (2 * s)
    return min((s * k * k + d * k) // 2 for k in (v - 1, v, v + 1, v + 2))


def theta_series(p: ThetaParams, order: int) -> Series:
    """``f(a, b) = sum_k a^{k(k+1)/2} b^{k(k-1)/2}`` by direct summation."""
    p.check()
    base = min(theta_min_exponent(p), order)
    out = [0] * (order - base)
    for e, sign in _theta_terms(p, order):
        out[e - base] += sign
    return Series(tuple(out), base)


def _negative_mass(c: SignedMonomial, step: SignedMonomial) -> int:
    """Sum of the negative exponents among c, c*step, c*step^2, ... (sign-independent)."""
    return sum(e for e in range(c.exponent, 0, step.exponent))


def _laurent_pochhammer(c: SignedMonomial, step: SignedMonomial, order: int) -> Series:
    """``(c; step)_inf`` exact through ``q^(order-1)``; ``step`` may carry a sign
    and ``c`` may have a nonpositive exponent."""
    if step.sign < 0:
        # split k into even and odd: (c; -p)_inf = (c; p^2)_inf (-c p; p^2)_inf
        sq = step * step
        odd = c * step
        even_part = _laurent_pochhammer(c, sq, order - _negative_mass(odd, sq))
        odd_part = _laurent_pochhammer(odd, sq, order - _negative_mass(c, sq))
        return (even_part * odd_part).truncate(order)
    low = []
    while c.exponent < 0:
        low.append(c)
        c = c * step
    pad = -sum(t.exponent for t in low)
    out = pochhammer(c.sign, c.exponent, step.exponent, order + pad)
    for t in low:
        binom = Series.from_terms({0: 1, t.exponent: -t.sign}, order + pad + 1, t.exponent)
        out = out * binom
    return out.truncate(order)


def triple_product(p: ThetaParams, order: int) -> Series:
    """``f(a, b) = (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf``."""
    p.check()
    ab = p.a * p.b
    mass_a = _negative_mass(-p.a, ab)
    mass_b = _negative_mass(-p.b, ab)
    out = _laurent_pochhammer(ab, ab, order - mass_a - mass_b)
    out = out * _laurent_pochhammer(-p.a, ab, order - mass_b)
    out = out * _laurent_pochhammer(-p.b, ab, order - mass_a)
    return out.truncate(order)


def _theta_product(prefactor: SignedMonomial, params: list[ThetaParams], order: int) -> Series:
    """``prefactor * prod f(params)`` exact through ``q^(order-1)``."""
    for p in params:
        p.check()
    lows = [theta_min_exponent(p) for p in params]
    total = sum(lows)
    out = None
    for p, low in zip(params, lows):
        # other factors can lower the window by at most their minimum exponents
        s = theta_series(p, order - prefactor.exponent - (total - low))
        out = s if out is None else out * s
    return out.shift(prefactor.exponent).scale(prefactor.sign).truncate(order)


def lemma1_residual(which: int, a: SignedMonomial, b: SignedMonomial, order: int) -> Series:
    """LHS - RHS of one of the four product identities for f(a, b); zero when the identity holds.

    1. 2 f(a,ab^2) f(b,a^2b) - f(1,ab) f(a,b)
    2. f(a,b) f(-a,-b) - f(-ab,-ab) f(-a^2,-b^2)
    3. f(a,b) - f(a^3b,ab^3) - a f(b/a, a^5b^3)
    4. f(a,b)^2 - f(a^2,b^2) f(ab,ab) - a f(b/a, a^3b) f(1, a^2b^2)
    """
    T = ThetaParams
    ab = a * b
    if which == 1:
        lhs = _theta_product(ONE, [T(a, a * b * b), T(b, a * a * b)], order).scale(2)
        rhs = _theta_product(ONE, [T(ONE, ab), T(a, b)], order)
        return lhs - rhs
    if which == 2:
        lhs = _theta_product(ONE, [T(a, b), T(-a, -b)], order)
        rhs = _theta_product(ONE, [T(-ab, -ab), T(-(a * a), -(b * b))], order)
        return lhs - rhs
    if which == 3:
        lhs = _theta_product(ONE, [T(a, b)], order)
        r1 = _theta_product(ONE, [T(a**3 * b, a * b**3)], order)
        r2 = _theta_product(a, [T(b / a, a**5 * b**3)], order)
        return lhs - r1 - r2
    if which == 4:
        lhs = _theta_product(ONE, [T(a, b), T(a, b)], order)
        r1 = _theta_product(ONE, [T(a * a, b * b), T(ab, ab)], order)
        r2 = _theta_product(a, [T(b / a, a**3 * b), T(ONE, ab * ab)], order)
        return lhs - r1 - r2
    raise ValueError(f"identity number must be 1..4, got {which}")


# ---------------------------------------------------------------------------
# bivariate sums


@dataclass(frozen=True)
class QuadFormSum:
    """``q^shift * sum_{m,n} eps^(m+n) q^(A m^2 + B m + C n^2 + D n)``."""

    A: int
    B: int
    C: int
    D: int
    shift: int = 0
    eps: int = 1

    def __post_init__(self):
        if self.A < 1 or self.C < 1:
            raise ValueError("A and C must be positive")
        if self.eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")

    def __str__(self) -> str:
        pre = "" if self.shift == 0 else f"q^{self.shift} "
        sgn = "" if self.eps == 1 else "(-1)^(m+n) "
        return f"{pre}sum {sgn}q^({self.A}m^2+{self.B}m+{self.C}n^2+{self.D}n)"


def _min_quadratic(a2: int, a1: int) -> int:
    v = -a1 // (2 * a2)
    return min(a2 * k * k + a1 * k for k in (v, v + 1))


def quad_form_series(s: QuadFormSum, order: int) -> Series:
    """Sum over the finite lattice region whose exponent is below ``order``."""
    min_m = _min_quadratic(s.A, s.B)
    min_n = _min_quadratic(s.C, s.D)
    low = s.shift + min_m + min_n
    base = min(0, low, order)
    out = [0] * (order - base)
    for m in _quadratic_window(s.A, s.B, s.shift + min_n, order):
        em = s.shift + s.A * m * m + s.B * m
        if em + min_n >= order:
            continue
        for n in _quadratic_window(s.C, s.D, em, order):
            e = em + s.C * n * n + s.D * n
            if e < order:
                out[e - base] += 1 if s.eps == 1 or (m + n) % 2 == 0 else -1
    return Series(tuple(out), base)


def residue_component(s: Series, m: int, r: int) -> Series:
    """Keep only the terms whose exponent is congruent to ``r`` mod ``m`` (no reindexing)."""
    if m < 1 or not 0 <= r < m:
        raise InvalidResidueError(f"residue {r} not in [0, {m})")
    return Series(
        tuple(c if (s.base + i) % m == r else 0 for i, c in enumerate(s.coeffs)), s.base
    )


def _qfs(B: int, D: int, shift: int) -> QuadFormSum:
    return QuadFormSum(20, B, 20, D, shift)


def _comp(shift: int, B: int, D: int) -> QuadFormSum:
    return QuadFormSum(100, B, 100, D, shift)


# S_1..S_8 (e-case) and T_1..T_8 (f-case), with the closed forms of their
# residue components: 3 mod 5 for the e-case, 4 mod 5 for the f-case.
SECTION5 = {
    "e": {
        "residue": 3,
        "sums": [_qfs(2, 1, 0), _qfs(18, 1, 4), _qfs(2, 9, 1), _qfs(18, 9, 5),
                 _qfs(2, 11, 4), _qfs(18, 11, 8), _qfs(2, 21, 8), _qfs(18, 21, 12)],
        "components": [_comp(43, 125, 40), _comp(23, 75, 60), _comp(23, 75, 60), _comp(43, 125, 40),
                       _comp(13, 25, 60), _comp(8, 25, 40), _comp(8, 25, 40), _comp(13, 25, 60)],
    },
    "f": {
        "residue": 4,
        "sums": [_qfs(6, 7, 0), _qfs(14, 7, 2), _qfs(6, 17, 3), _qfs(14, 17, 5),
                 _qfs(6, 3, 2), _qfs(14, 3, 4), _qfs(6, 13, 4), _qfs(14, 13, 6)],
        "components": [_comp(14, 20, 75), _comp(29, 80, 75), _comp(29, 80, 75), _comp(14, 20, 75),
                       _comp(19, 80, 25), _comp(4, 20, 25), _comp(4, 20, 25), _comp(19, 80, 25)],
    },
}
# pairs whose residue components cancel (0-based indices into the sums)
CANCEL_PAIRS = ((0, 3), (1, 2), (4, 7), (5, 6))

# defining products, per case and sign variant
SECTION5_PRODUCTS = {
    ("e", "upper"): "(-q,-q^4;q^5)(q^4,q^6;q^10)^3",
    ("e", "lower"): "(q,q^4;q^5)(-q^4,-q^6;q^10)^3",
    ("f", "upper"): "(-q^2,-q^3;q^5)(q^2,q^8;q^10)^3",
    ("f", "lower"): "(q^2,q^3;q^5)(-q^2,-q^8;q^10)^3",
}
# U1 U2 U3 / V1 V2 V3 factorizations of the same products
SECTION5_FACTORED = {
    ("e", "upper"): ["(-q,q^4,q^6,-q^9;q^10)", "(q^8,q^12;q^20)", "(q^4,q^6;q^10)"],
    ("e", "lower"): ["(q,-q^4,-q^6,q^9;q^10)", "(q^8,q^12;q^20)", "(-q^4,-q^6;q^10)"],
    ("f", "upper"): ["(q^2,-q^3,-q^7,q^8;q^10)", "(q^4,q^16;q^20)", "(q^2,q^8;q^10)"],
    ("f", "lower"): ["(-q^2,q^3,q^7,-q^8;q^10)", "(q^4,q^16;q^20)", "(-q^2,-q^8;q^10)"],
}


def section5_sums(case: str, order: int) -> list[Series]:
    return [quad_form_series(s, order) for s in SECTION5[case]["sums"]]


def section5_components(case: str, order: int) -> list[Series]:
    """The closed forms claimed for the residue components, in the original variable."""
    return [quad_form_series(s, order) for s in SECTION5[case]["components"]]


def section5_assembled(case: str, variant: str, order: int) -> Series:
    """Rebuild the e- or f-series from its bivariate sums.

    (q^5;q^5)/(q^10;q^10)^4 * [X (S1 -+ S2 +- S3 - S4) -+ Y (S5 -+ S6 +- S7 - S8)]
    with X = (-q^15,-q^25,q^40;q^40), Y = (-q^5,-q^35,q^40;q^40); upper signs
    when ``variant == "upper"``.
    """
    from .dsl import parse
    from .qproducts import expand

    u = 1 if variant == "upper" else -1
    S = section5_sums(case, order)
    x = expand(parse("(-q^15,-q^25,q^40;q^40)"), order)
    y = expand(parse("(-q^5,-q^35,q^40;q^40)"), order)
    pre = expand(parse("(q^5;q^5)/(q^10;q^10)^4"), order)
    first = S[0] - S[1].scale(u) + S[2].scale(u) - S[3]
    second = S[4] - S[5].scale(u) + S[6].scale(u) - S[7]
    return pre * (x * first - (y * second).scale(u))


def _first_mismatch(lhs: Series, rhs: Series) -> tuple[int, int, int] | None:
    from .series import equal_up_to

    cmp = equal_up_to(lhs, rhs)
    if cmp:
        return None
    e = cmp.first_mismatch
    return e, lhs.coeff(e), rhs.coeff(e)


def section5_cancellation(case: str, variant: str, order: int):
    """Check the pairwise cancellation argument for the e- or f-series.

    Sub-checks, in order: the factored product equals the defining product;
    the sum assembly equals the defining product; each of the eight residue
    components equals its closed form; the four cancelling pairs sum to zero;
    the defining product vanishes on the claimed progression.
    """
    from .dsl import parse
    from .qproducts import expand
    from .verify import VerificationReport

    if case not in SECTION5 or variant not in ("upper", "lower"):
        raise ValueError(f"unknown section-5 case {case!r}/{variant!r}")
    if order < 50:
        raise ValueError("order must be at least 50")
    residue = SECTION5[case]["residue"]
    target = expand(parse(SECTION5_PRODUCTS[case, variant]), order)
    checks: list[tuple[str, Series, Series]] = []

    factored = Series.one(order)
    for text in SECTION5_FACTORED[case, variant]:
        factored = factored * expand(parse(text), order)
    checks.append(("factorization", factored, target))
    checks.append(("assembly", section5_assembled(case, variant, order), target))

    sums = section5_sums(case, order)
    comps = [residue_component(s, 5, residue) for s in sums]
    for i, (got, want) in enumerate(zip(comps, section5_components(case, order)), 1):
        checks.append((f"component {i}", got, want))
    for i, j in CANCEL_PAIRS:
        checks.append((f"cancel {i + 1}-{j + 1}", comps[i] - comps[j], Series.zero(order)))
    prog = target.dissect(5, residue)
    checks.append((f"vanish 5n+{residue}", prog, Series.zero(prog.order, prog.base)))

    checked = 0
    for name, lhs, rhs in checks:
        bad = _first_mismatch(lhs, rhs)
        window = min(lhs.order, rhs.order) - min(lhs.base, rhs.base)
        if bad is not None:
            return VerificationReport(
                case_id=f"section5-{case}-{variant}",
                claim=_section5_claim(case, variant),
                order=order,
                checked_count=checked,
                status="fail",
                first_failure=bad,
                note=name,
            )
        checked += window
    return VerificationReport(
        case_id=f"section5-{case}-{variant}",
        claim=_section5_claim(case, variant),
        order=order,
        checked_count=checked,
        status="pass",
        note=f"{len(checks)} sub-checks",
    )


def _section5_claim(case: str, variant: str) -> str:
    residue = SECTION5[case]["residue"]
    return f"{SECTION5_PRODUCTS[case, variant]}: residue-{residue} components cancel in pairs; [5n+{residue}] = 0"
