"""Executable vanishing-coefficient and coefficient-equality claims.

Every case reduces to a :class:`Claim` over product expressions (or, for the
bivariate-sum cancellations, to :func:`qvanish.theta.section5_cancellation`)
and produces a flat :class:`VerificationReport`.
"""

from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable

from .dsl import format_expr, parse
from .errors import InvalidCaseError
from .qproducts import Factor, ProductExpr, expand
from .series import Series

log = logging.getLogger(__name__)

__all__ = [
    "Term",
    "Claim",
    "VerificationReport",
    "Case",
    "check",
    "andrews_bressoud_case",
    "alladi_gordon_case",
    "alladi_gordon_companion",
    "mclaughlin_case",
    "mclaughlin_companion",
    "richmond_szekeres_suite",
    "paper_suite",
    "SUITES",
    "suite_cases",
    "run_cases",
    "report_table",
    "summarize",
]

KINDS = ("vanishes", "equals_progression", "equals_series", "positive_difference")
STATUSES = ("pass", "fail", "vacuous")


@lru_cache(maxsize=256)
def _expand(expr: ProductExpr, order: int) -> Series:
    return expand(expr, order)


@dataclass(frozen=True)
class Term:
    """``coefficient * q^shift * sum_n c_{modulus*n + residue} q^n`` for the expansion of ``expr``."""

    expr: ProductExpr
    modulus: int = 1
    residue: int = 0
    coefficient: int = 1
    shift: int = 0

    def __post_init__(self):
        if isinstance(self.expr, str):
            object.__setattr__(self, "expr", parse(self.expr))
        object.__setattr__(self, "expr", self.expr.normalize())
        if self.modulus < 1 or not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not in [0, {self.modulus})")

    def series(self, order: int) -> Series:
        s = _expand(self.expr, order)
        if self.modulus > 1:
            s = s.dissect(self.modulus, self.residue)
        return s.scale(self.coefficient).shift(self.shift)

    def __str__(self) -> str:
        text = format_expr(self.expr)
        if self.modulus > 1:
            text = f"[{self.modulus}n+{self.residue}]{text}"
        if self.shift:
            text = f"q^{self.shift}*{text}"
        if self.coefficient != 1:
            text = f"{self.coefficient}*{text}"
        return text


def _side(terms: tuple[Term, ...], order: int) -> Series | None:
    out = None
    for t in terms:
        s = t.series(order)
        out = s if out is None else out + s
    return out


def _join(terms: tuple[Term, ...]) -> str:
    return " + ".join(str(t) for t in terms).replace("+ -", "- ")


@dataclass(frozen=True)
class Claim:
    """A statement about coefficient progressions.

    ``left`` and ``right`` are sums of terms.  For ``equals_progression`` the
    right side is compared at index ``n - index_shift`` (so b_{5n+1} = a_{5n-1}
    is ``right=[5n+4]a`` with ``index_shift=1``), and only indices where the
    right index is nonnegative are compared.
    """

    kind: str
    left: tuple[Term, ...]
    right: tuple[Term, ...] = ()
    index_shift: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown claim kind {self.kind!r}")
        if self.kind != "vanishes" and not self.right:
            raise ValueError(f"{self.kind} claims need a right side")
        for side in ("left", "right"):
            val = getattr(self, side)
            if isinstance(val, Term):
                object.__setattr__(self, side, (val,))
            elif not isinstance(val, tuple):
                object.__setattr__(self, side, tuple(val))

    def __str__(self) -> str:
        lhs = _join(self.left)
        if self.kind == "vanishes":
            return f"{lhs} = 0"
        rhs = _join(self.right)
        if self.index_shift:
            rhs = f"q^{self.index_shift}*({rhs})"
        op = ">" if self.kind == "positive_difference" else "="
        return f"{lhs} {op} {rhs}"


@dataclass(frozen=True)
class VerificationReport:
    case_id: str
    claim: str
    order: int
    checked_count: int
    status: str
    first_failure: tuple[int, int, int] | None = None
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == "fail") != (self.first_failure is not None):
            raise ValueError("first_failure must be present exactly when status is fail")
        if self.first_failure is not None and not isinstance(self.first_failure, tuple):
            object.__setattr__(self, "first_failure", tuple(self.first_failure))

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["N"] = d.pop("order")
        if self.first_failure is not None:
            d["first_failure"] = list(self.first_failure)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "VerificationReport":
        d = dict(d)
        d["order"] = d.pop("N")
        ff = d.get("first_failure")
        d["first_failure"] = tuple(ff) if ff is not None else None
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def check(claim: Claim, order: int, case_id: str = "") -> VerificationReport:
    """Expand both sides at ``order``, extract progressions and compare exactly."""
    left = _side(claim.left, order)
    right = _side(claim.right, order) if claim.right else None
    lo = 0
    hi = left.order
    if right is not None:
        right = right.shift(claim.index_shift)
        hi = min(hi, right.order)
        if claim.kind == "equals_progression":
            lo = max(0, claim.index_shift)

    def report(status, checked, failure=None):
        return VerificationReport(case_id or str(claim), str(claim), order, checked, status, failure)

    if hi <= lo:
        return report("vacuous", 0)
    for n in range(lo, hi):
        a = left.coeff(n)
        b = right.coeff(n) if right is not None else 0
        if claim.kind == "positive_difference":
            ok = a - b > 0
        else:
            ok = a == b
        if not ok:
            return report("fail", n - lo, (n, a, b))
    return report("pass", hi - lo)


# ---------------------------------------------------------------------------
# cases and suites


@dataclass(frozen=True)
class Case:
    """A deferred verification: ``func(*args, order)`` returns a report."""

    case_id: str
    func: Callable[..., VerificationReport]
    args: tuple = field(default=())

    def run(self, order: int) -> VerificationReport:
        return self.func(*self.args, order)


def _run_claim(case_id: str, claim: Claim, order: int) -> VerificationReport:
    return check(claim, order, case_id)


def _run_case(case: Case, order: int) -> VerificationReport:
    return case.run(order)


def run_cases(cases: Iterable[Case], order: int, parallel: bool = False) -> list[VerificationReport]:
    """Run cases, returning reports in the order the cases were given."""
    cases = list(cases)
    if parallel and len(cases) > 1:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(_run_case, cases, [order] * len(cases)))
    return [c.run(order) for c in cases]


def _quotient(num: list[tuple[int, int]], den: list[tuple[int, int]], modulus: int) -> ProductExpr:
    """Product of ``(sign*q^offset; q^modulus)`` over ``num`` divided by the same over ``den``."""
    return ProductExpr(
        tuple(Factor(s, o, modulus, 1) for s, o in num) + tuple(Factor(s, o, modulus, -1) for s, o in den)
    )


def _vanish_report(case_id: str, expr: ProductExpr, modulus: int, residue: int, order: int) -> VerificationReport:
    return check(Claim("vanishes", (Term(expr, modulus, residue % modulus),)), order, case_id)


# -- Andrews-Bressoud ---------------------------------------------------------


def _andrews_bressoud_valid(k: int, r: int) -> None:
    if not 1 <= r < k:
        raise InvalidCaseError(f"need 1 <= r < k, got k={k}, r={r}")
    if math.gcd(r, k) != 1:
        raise InvalidCaseError(f"gcd(r, k) = {math.gcd(r, k)} != 1")
    if (r + k) % 2 == 0:
        raise InvalidCaseError("r and k must have opposite parity")


def andrews_bressoud_case(k: int, r: int, order: int) -> VerificationReport:
    """(q^r,q^{2k-r};q^{2k}) / (q^{k-r},q^{k+r};q^{2k}) vanishes at n = r(k-r+1)/2 mod k."""
    _andrews_bressoud_valid(k, r)
    expr = _quotient([(1, r), (1, 2 * k - r)], [(1, k - r), (1, k + r)], 2 * k)
    return _vanish_report(f"andrews-bressoud-k{k}-r{r}", expr, k, r * (k - r + 1) // 2, order)


def andrews_bressoud_grid(kmax: int = 10) -> list[tuple[int, int]]:
    out = []
    for k in range(2, kmax + 1):
        for r in range(1, k):
            try:
                _andrews_bressoud_valid(k, r)
            except InvalidCaseError:
                continue
            out.append((k, r))
    return out


# -- Alladi-Gordon --------------------------------------------------------------


def alladi_gordon_params(m: int, k: int, s: int, companion: bool = False) -> tuple[int, int]:
    """Return ``(r, r')`` for the given ``(m, k, s)``, or raise InvalidCaseError."""
    if not 1 < m < k:
        raise InvalidCaseError(f"need 1 < m < k, got m={m}, k={k}")
    mk = m * k
    if not 1 <= s < mk or math.gcd(s, mk) != 1:
        raise InvalidCaseError(f"need 1 <= s < mk with gcd(s, mk) = 1, got s={s}")
    if companion and k % 2 == 0:
        raise InvalidCaseError("the companion form needs k odd")
    r_star = (k - 1) * s
    r = r_star % mk
    r_prime = -(-r_star // mk) % k
    if r_prime == 0:
        raise InvalidCaseError(f"ceil(r*/mk) = {-(-r_star // mk)} is 0 mod k; r' is undefined")
    return r, r_prime


def _alladi_gordon(m: int, k: int, s: int, order: int, companion: bool) -> VerificationReport:
    r, rp = alladi_gordon_params(m, k, s, companion)
    mk = m * k
    sign = -1 if companion else 1
    expr = _quotient([(1, r), (1, mk - r)], [(sign, s), (sign, mk - s)], mk)
    tag = "alladi-gordon-companion" if companion else "alladi-gordon"
    return _vanish_report(f"{tag}-m{m}-k{k}-s{s}", expr, k, r * rp, order)


def alladi_gordon_case(m: int, k: int, s: int, order: int) -> VerificationReport:
    """(q^r,q^{mk-r};q^{mk}) / (q^s,q^{mk-s};q^{mk}) vanishes at n = r r' mod k."""
    return _alladi_gordon(m, k, s, order, companion=False)


def alladi_gordon_companion(m: int, k: int, s: int, order: int) -> VerificationReport:
    """As :func:`alladi_gordon_case` with denominator (-q^s,-q^{mk-s};q^{mk}), k odd."""
    return _alladi_gordon(m, k, s, order, companion=True)


def alladi_gordon_grid(kmax: int = 7, companion: bool = False) -> list[tuple[int, int, int]]:
    out = []
    for k in range(3, kmax + 1):
        for m in range(2, k):
            for s in range(1, m * k):
                try:
                    alladi_gordon_params(m, k, s, companion)
                except InvalidCaseError as exc:
                    if math.gcd(s, m * k) == 1 and (k % 2 or not companion):
                        log.info("alladi-gordon m=%d k=%d s=%d rejected: %s", m, k, s, exc)
                    continue
                out.append((m, k, s))
    return out


# -- McLaughlin -------------------------------------------------------------------


def mclaughlin_params(k: int, m: int, s: int, t: int, companion: bool = False) -> int:
    """Return ``r = s*m + t`` for a valid tuple, or raise InvalidCaseError."""
    if k < 2 or m < 2:
        raise InvalidCaseError(f"need k > 1 and m > 1, got k={k}, m={m}")
    if not 0 <= s < k or not 1 <= t < m:
        raise InvalidCaseError(f"need 0 <= s < k and 1 <= t < m, got s={s}, t={t}")
    if companion and k % 2 == 0:
        raise InvalidCaseError("the companion form needs k odd")
    r = s * m + t
    if math.gcd(r, k) != 1:
        raise InvalidCaseError(f"gcd(r, k) = gcd({r}, {k}) != 1")
    if r - t * k < 1:
        raise InvalidCaseError(f"numerator offset r - tk = {r - t * k} is not positive")
    return r


def _mclaughlin(k: int, m: int, s: int, t: int, order: int, companion: bool) -> VerificationReport:
    r = mclaughlin_params(k, m, s, t, companion)
    mk = m * k
    low = r - t * k
    sign = -1 if companion else 1
    expr = _quotient([(1, low), (1, mk - low)], [(sign, r), (sign, mk - r)], mk)
    tag = "mclaughlin-companion" if companion else "mclaughlin"
    return _vanish_report(f"{tag}-k{k}-m{m}-s{s}-t{t}", expr, k, -r * s, order)


def mclaughlin_case(k: int, m: int, s: int, t: int, order: int) -> VerificationReport:
    """(q^{r-tk},q^{mk-r+tk};q^{mk}) / (q^r,q^{mk-r};q^{mk}) vanishes at n = -rs mod k."""
    return _mclaughlin(k, m, s, t, order, companion=False)


def mclaughlin_companion(k: int, m: int, s: int, t: int, order: int) -> VerificationReport:
    """As :func:`mclaughlin_case` with denominator (-q^r,-q^{mk-r};q^{mk}), k odd."""
    return _mclaughlin(k, m, s, t, order, companion=True)


def mclaughlin_grid(kmax: int = 6, mmax: int = 6, companion: bool = False) -> list[tuple[int, int, int, int]]:
    out = []
    for k in range(2, kmax + 1):
        for m in range(2, mmax + 1):
            for s in range(k):
                for t in range(1, m):
                    try:
                        mclaughlin_params(k, m, s, t, companion)
                    except InvalidCaseError as exc:
                        log.info("mclaughlin k=%d m=%d s=%d t=%d rejected: %s", k, m, s, t, exc)
                        continue
                    out.append((k, m, s, t))
    return out


# -- fixed catalog -------------------------------------------------------------------

A_SERIES = "(-q,-q^4;q^5)(q,q^9;q^10)^3"
B_SERIES = "(-q^2,-q^3;q^5)(q^3,q^7;q^10)^3"
C_SERIES = "(-q,-q^4;q^5)^3(q^3,q^7;q^10)"
D_SERIES = "(-q^2,-q^3;q^5)^3(q,q^9;q^10)"

RICHMOND_SZEKERES = {
    "alpha": ("(q^3,q^5;q^8)/(q,q^7;q^8)", 4, 3),
    "beta": ("(q,q^7;q^8)/(q^3,q^5;q^8)", 4, 2),
    "gamma": ("(q^5,q^7;q^12)/(q,q^11;q^12)", 6, 5),
    "delta": ("(q,q^11;q^12)/(q^5,q^7;q^12)", 6, 3),
}

# (case id, product, modulus, residue)
VANISHING = {
    "hirschhorn": [
        ("hirschhorn-a-5n+2", A_SERIES, 5, 2),
        ("hirschhorn-a-5n+4", A_SERIES, 5, 4),
        ("hirschhorn-b-5n+1", B_SERIES, 5, 1),
        ("hirschhorn-b-5n+4", B_SERIES, 5, 4),
    ],
    "tang": [
        ("tang-c-5n+3", C_SERIES, 5, 3),
        ("tang-c-5n+4", C_SERIES, 5, 4),
        ("tang-d-5n+3", D_SERIES, 5, 3),
        ("tang-d-5n+4", D_SERIES, 5, 4),
    ],
    "theorem5c": [
        ("5c-e-upper-5n+3", "(-q,-q^4;q^5)(q^4,q^6;q^10)^3", 5, 3),
        ("5c-f-upper-5n+4", "(-q^2,-q^3;q^5)(q^2,q^8;q^10)^3", 5, 4),
        ("5c-e-lower-5n+3", "(q,q^4;q^5)(-q^4,-q^6;q^10)^3", 5, 3),
        ("5c-f-lower-5n+4", "(q^2,q^3;q^5)(-q^2,-q^8;q^10)^3", 5, 4),
    ],
    "theorem5e": [
        ("5e-g-5n+2", "(q,q^4;q^5)(-q,-q^9;q^10)^3", 5, 2),
        ("5e-h-5n+1", "(q^2,q^3;q^5)(-q^3,-q^7;q^10)^3", 5, 1),
    ],
    "theorem5f": [
        ("5f-k-5n+4", "(q,q^4;q^5)(q,q^9;q^10)^3", 5, 4),
        ("5f-l-5n+4", "(q^2,q^3;q^5)(q^3,q^7;q^10)^3", 5, 4),
    ],
    "theorem5g": [
        ("5g-s-5n+3", "(q,q^4;q^5)^3(-q^3,-q^7;q^10)", 5, 3),
        ("5g-t-5n+4", "(q^2,q^3;q^5)^3(-q,-q^9;q^10)", 5, 4),
    ],
    "theorem5h": [
        ("5h-u-5n+4", "(q,q^4;q^5)^3(q^3,q^7;q^10)", 5, 4),
        ("5h-v-5n+3", "(q^2,q^3;q^5)^3(q,q^9;q^10)", 5, 3),
    ],
}


def _progression(expr: str, r: int, **kw) -> Term:
    return Term(parse(expr), 5, r, **kw)


def _theorem5a_claims() -> list[tuple[str, Claim]]:
    b = lambda r: _progression(B_SERIES, r)  # noqa: E731
    a = lambda r, **kw: _progression(A_SERIES, r, **kw)  # noqa: E731
    return [
        ("5a-b5n+1=a5n-1", Claim("equals_progression", (b(1),), (a(4),), index_shift=1)),
        ("5a-b5n+2=a5n", Claim("equals_progression", (b(2),), (a(0),))),
        ("5a-b5n+3=a5n+1", Claim("equals_progression", (b(3),), (a(1),))),
        ("5a-b5n+4=a5n+2", Claim("equals_progression", (b(4),), (a(2),))),
        (
            "5a-difference",
            Claim(
                "equals_series",
                (b(0), a(3, coefficient=-1, shift=1)),
                (Term(parse("(q;q)^4/(q^2;q^2)^4")),),
            ),
        ),
    ]


def _theorem5b_claims() -> list[tuple[str, Claim]]:
    c = lambda r, **kw: _progression(C_SERIES, r, **kw)  # noqa: E731
    d = lambda r, **kw: _progression(D_SERIES, r, **kw)  # noqa: E731
    out = [(f"5b-c5n+{r}=d5n+{r}", Claim("equals_progression", (c(r),), (d(r),))) for r in (0, 2, 3, 4)]
    out.append(("5b-c5n+1>d5n+1", Claim("positive_difference", (c(1),), (d(1),))))
    out.append(
        (
            "5b-difference",
            Claim(
                "equals_series",
                (c(1), d(1, coefficient=-1)),
                (Term(parse("(q^2;q^2)^4/(q;q)^4"), coefficient=4),),
            ),
        )
    )
    return out


def _identity_claims() -> list[tuple[str, Claim]]:
    """Product rewrites and the two R(q) identities, stated as series equalities."""
    R = "(q,q^4;q^5)/(q^2,q^3;q^5)"
    R2 = "(q^2,q^8;q^10)/(q^4,q^6;q^10)"
    # R(q) R(q^2)^2 and its reciprocal, as product expressions
    x = parse(R) * parse(R2) ** 2
    y = parse(R2) * parse(R) ** -2  # R(q^2)/R(q)^2
    eta_ab = parse("(q;q)(q^10;q^10)/(q^2;q^2)/(q^5;q^5)")
    eta_cd = parse("(q^5;q^5)(q^2;q^2)/(q;q)/(q^10;q^10)")
    T = Term
    return [
        ("rewrite-a", Claim("equals_series", (T(A_SERIES),), (T(eta_ab * x),))),
        ("rewrite-b", Claim("equals_series", (T(B_SERIES),), (T(eta_ab * x**-1),))),
        ("rewrite-c", Claim("equals_series", (T(C_SERIES),), (T(eta_cd * y),))),
        ("rewrite-d", Claim("equals_series", (T(D_SERIES),), (T(eta_cd * y**-1),))),
        (
            "rewrite-minus-q-q4",
            Claim("equals_series", (T("(-q,-q^4;q^5)"),), (T("(q^2,q^8;q^10)/(q,q^4;q^5)"),)),
        ),
        (
            "rogers-ramanujan-identity-1",
            Claim(
                "equals_series",
                (T(x**-1), T(x, coefficient=-1, shift=2)),
                (T("(q^2;q^2)(q^5;q^5)^5/(q;q)/(q^10;q^10)^5"),),
            ),
        ),
        (
            "rogers-ramanujan-identity-2",
            Claim(
                "equals_series",
                (T(y), T(y**-1, coefficient=-1)),
                (T("(q^10;q^10)^5(q;q)/(q^5;q^5)^5/(q^2;q^2)", coefficient=4, shift=1),),
            ),
        ),
        (
            "chain-b-minus-q2a",
            Claim(
                "equals_series",
                (T(B_SERIES), T(A_SERIES, coefficient=-1, shift=2)),
                (T("(q^5;q^5)^4/(q^10;q^10)^4"),),
            ),
        ),
        (
            "chain-c-minus-d",
            Claim(
                "equals_series",
                (T(C_SERIES), T(D_SERIES, coefficient=-1)),
                (T("(q^10;q^10)^4/(q^5;q^5)^4", coefficient=4, shift=1),),
            ),
        ),
    ]


def _claim_cases(pairs: list[tuple[str, Claim]]) -> list[Case]:
    return [Case(cid, _run_claim, (cid, claim)) for cid, claim in pairs]


def _vanishing_cases(name: str) -> list[Case]:
    return _claim_cases(
        [(cid, Claim("vanishes", (_progression(expr, r),))) for cid, expr, m, r in VANISHING[name]]
    )


def _section5_cases() -> list[Case]:
    from .theta import section5_cancellation

    return [
        Case(f"section5-{c}-{v}", section5_cancellation, (c, v))
        for c in ("e", "f")
        for v in ("upper", "lower")
    ]


def _richmond_szekeres_cases() -> list[Case]:
    return [
        Case(f"richmond-szekeres-{name}", _vanish_report, (f"richmond-szekeres-{name}", parse(e), m, r))
        for name, (e, m, r) in RICHMOND_SZEKERES.items()
    ]


def _grid_cases(kind: str) -> list[Case]:
    if kind == "andrews-bressoud":
        return [Case(f"andrews-bressoud-k{k}-r{r}", andrews_bressoud_case, (k, r)) for k, r in andrews_bressoud_grid()]
    if kind == "alladi-gordon":
        main = [Case(f"alladi-gordon-m{m}-k{k}-s{s}", alladi_gordon_case, t) for t in alladi_gordon_grid() for m, k, s in [t]]
        comp = [
            Case(f"alladi-gordon-companion-m{m}-k{k}-s{s}", alladi_gordon_companion, t)
            for t in alladi_gordon_grid(companion=True)
            for m, k, s in [t]
        ]
        return main + comp
    if kind == "mclaughlin":
        main = [Case("mclaughlin-k{}-m{}-s{}-t{}".format(*t), mclaughlin_case, t) for t in mclaughlin_grid()]
        comp = [
            Case("mclaughlin-companion-k{}-m{}-s{}-t{}".format(*t), mclaughlin_companion, t)
            for t in mclaughlin_grid(companion=True)
        ]
        return main + comp
    raise KeyError(kind)


_MAIN_SUITES = (
    "hirschhorn",
    "tang",
    "theorem5a",
    "theorem5b",
    "theorem5c",
    "theorem5e",
    "theorem5f",
    "theorem5g",
    "theorem5h",
    "section5",
    "identities",
)
_CLASSICAL_SUITES = ("richmond-szekeres", "andrews-bressoud", "alladi-gordon", "mclaughlin")


def suite_cases(name: str) -> list[Case]:
    """Cases of a named suite; ``main`` and ``all`` are unions."""
    if name in VANISHING:
        return _vanishing_cases(name)
    if name == "theorem5a":
        return _claim_cases(_theorem5a_claims())
    if name == "theorem5b":
        return _claim_cases(_theorem5b_claims())
    if name == "identities":
        return _claim_cases(_identity_claims())
    if name == "section5":
        return _section5_cases()
    if name == "richmond-szekeres":
        return _richmond_szekeres_cases()
    if name in ("andrews-bressoud", "alladi-gordon", "mclaughlin"):
        return _grid_cases(name)
    if name == "main":
        return [c for s in _MAIN_SUITES for c in suite_cases(s)]
    if name == "all":
        return [c for s in _MAIN_SUITES + _CLASSICAL_SUITES for c in suite_cases(s)]
    raise KeyError(name)


SUITES = _MAIN_SUITES + _CLASSICAL_SUITES + ("main", "all")


def richmond_szekeres_suite(order: int) -> list[VerificationReport]:
    return run_cases(_richmond_szekeres_cases(), order)


def paper_suite(order: int, parallel: bool = False) -> list[VerificationReport]:
    return run_cases(suite_cases("main"), order, parallel)


# ---------------------------------------------------------------------------
# rendering


def report_table(reports: list[VerificationReport]) -> str:
    rows = [("case", "status", "N", "checked", "first failure", "claim")]
    for r in reports:
        ff = "" if r.first_failure is None else "n={}: {} vs {}".format(*r.first_failure)
        if r.note and r.status == "fail":
            ff = f"{r.note}: {ff}"
        rows.append((r.case_id, r.status, str(r.order), str(r.checked_count), ff, r.claim))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row[:5], widths)) + "  " + row[5] for row in rows]
    return "\n".join(line.rstrip() for line in lines)


def summarize(reports: list[VerificationReport]) -> str:
    counts = {s: sum(r.status == s for r in reports) for s in STATUSES}
    return f"{len(reports)} cases: {counts['pass']} pass, {counts['fail']} fail, {counts['vacuous']} vacuous"
