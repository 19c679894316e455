"""Parser and formatter for the product-expression language.

Grammar (whitespace is insignificant)::

    expr     := ('1' | term) (('*'? term) | ('/' term))*
    term     := group ('^' sint)?
    group    := '(' arglist ';' modulus ')'
    arglist  := monomial (',' monomial)*
    monomial := ('-'|'+')? 'q' ('^' uint)?
    modulus  := 'q' ('^' uint)?
    sint     := '-'? uint

``(-q,-q^4;q^5)(q,q^9;q^10)^3`` is ``(-q;q^5)(-q^4;q^5)`` times the cube of
``(q;q^10)(q^9;q^10)``.  A leading ``1`` denotes the empty product, so
``1/(q;q)`` is the partition generating function.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

from .errors import QSeriesError
from .qproducts import Factor, ProductExpr

__all__ = ["ExprToken", "ParseError", "tokenize", "parse", "format_expr"]

_PUNCT = {
    "(": "lparen",
    ")": "rparen",
    ",": "comma",
    ";": "semicolon",
    "^": "caret",
    "/": "slash",
    "*": "star",
    "-": "minus",
    "+": "plus",
    "q": "q",
}


@dataclass(frozen=True)
class ExprToken:
    kind: str
    lexeme: str
    position: int


class ParseError(QSeriesError, ValueError):
    def __init__(self, position: int, expected: str, found: str, source: str = ""):
        self.position = position
        self.expected = expected
        self.found = found
        self.source = source
        super().__init__(f"at position {position}: expected {expected}, found {found}")

    def caret(self) -> str:
        """The source line with a caret under the offending position."""
        return f"{self.source}\n{' ' * self.position}^"


def tokenize(src: str) -> list[ExprToken]:
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch in _PUNCT:
            tokens.append(ExprToken(_PUNCT[ch], ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(ExprToken("integer", src[i:j], i))
            i = j
        else:
            raise ParseError(i, "one of ( ) , ; ^ / * - + q or a digit", repr(ch), src)
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self) -> ExprToken | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def fail(self, expected: str):
        tok = self.peek()
        if tok is None:
            raise ParseError(len(self.src), expected, "end of input", self.src)
        raise ParseError(tok.position, expected, repr(tok.lexeme), self.src)

    def take(self, kind: str, expected: str | None = None) -> ExprToken:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            self.fail(expected or kind)
        self.i += 1
        return tok

    def accept(self, kind: str) -> ExprToken | None:
        tok = self.peek()
        if tok is not None and tok.kind == kind:
            self.i += 1
            return tok
        return None

    def expr(self) -> ProductExpr:
        factors: list[Factor] = []
        tok = self.peek()
        if tok is not None and tok.kind == "integer" and tok.lexeme == "1":
            self.i += 1
        else:
            factors += self.term()
        while self.peek() is not None:
            if self.accept("slash"):
                factors += [Factor(f.sign, f.offset, f.modulus, -f.multiplicity) for f in self.term()]
            else:
                self.accept("star")
                factors += self.term()
        return ProductExpr(tuple(factors))

    def term(self) -> list[Factor]:
        monomials, modulus = self.group()
        mult = 1
        if self.accept("caret"):
            neg = self.accept("minus") is not None
            mult = self.uint()
            if mult == 0:
                raise ParseError(self.tokens[self.i - 1].position, "nonzero exponent", "0", self.src)
            mult = -mult if neg else mult
            if self.peek() is not None and self.peek().kind == "caret":
                self.fail("a group, '*' or '/' (exponent already given)")
        return [Factor(sign, offset, modulus, mult) for sign, offset in monomials]

    def group(self) -> tuple[list[tuple[int, int]], int]:
        self.take("lparen", "'('")
        monomials = [self.monomial()]
        while self.accept("comma"):
            monomials.append(self.monomial())
        self.take("semicolon", "',' or ';'")
        tok = self.take("q", "'q' (the modulus)")
        modulus = self.power()
        if modulus == 0:
            raise ParseError(tok.position, "positive modulus", "q^0", self.src)
        self.take("rparen", "')'")
        return monomials, modulus

    def monomial(self) -> tuple[int, int]:
        sign = 1
        if self.accept("minus"):
            sign = -1
        else:
            self.accept("plus")
        self.take("q", "a monomial like q, -q^4")
        return sign, self.power()

    def power(self) -> int:
        if self.accept("caret"):
            return self.uint()
        return 1

    def uint(self) -> int:
        return int(self.take("integer", "an unsigned integer").lexeme)


def parse(src: str) -> ProductExpr:
    """Parse a product expression; raises :class:`ParseError` with a source position."""
    p = _Parser(src)
    if p.peek() is None:
        raise ParseError(len(src), "a product expression", "end of input", src)
    return p.expr()


def _monomial(f: Factor) -> str:
    body = "q" if f.offset == 1 else f"q^{f.offset}"
    return ("-" if f.sign < 0 else "") + body


def _group(fs: list[Factor], modulus: int, mult: int) -> str:
    mod = "q" if modulus == 1 else f"q^{modulus}"
    text = f"({','.join(_monomial(f) for f in fs)};{mod})"
    return text if mult == 1 else f"{text}^{mult}"


def format_expr(expr: ProductExpr) -> str:
    """Canonical text; ``parse(format_expr(e))`` normalizes to ``e.normalize()``."""
    factors = expr.normalize().factors
    if not factors:
        return "1"

    def render(sel):
        out = []
        chosen = sorted(sel, key=lambda f: (f.modulus, abs(f.multiplicity), f.offset, -f.sign))
        for (modulus, mult), grp in groupby(chosen, key=lambda f: (f.modulus, abs(f.multiplicity))):
            out.append(_group(list(grp), modulus, mult))
        return out

    num = render(f for f in factors if f.multiplicity > 0)
    den = render(f for f in factors if f.multiplicity < 0)
    text = "".join(num) if num else "1"
    return text + "".join("/" + g for g in den)
