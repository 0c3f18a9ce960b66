"""Parsers for polynomial text and polynomial-system files.

Polynomial syntax: ``+ - *`` (``*`` may be omitted), ``^`` (or ``**``) for
powers, parentheses, integer and ``p/q`` coefficients, variable names from
the ring.  System files::

    field gf2;
    vars x y z;                 # greatest variable first
    order1 degrevlex;
    order2 lex;                 # optional ranking: order2 lex z y x
    gens: y^2 + x*z + x, z^2 + 1;
"""

from dataclasses import dataclass, field as dc_field
import re
from typing import List, Optional, Tuple

from .fields import Field, field_by_tag
from .polyring import ORDER_KINDS, MonomialOrder, Polynomial, PolynomialRing


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\*\*|[-+*^/(),;:])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str  # num | name | op | end
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, column)
        kind = m.lastgroup
        s = m.group()
        if kind == "nl":
            line += 1
            column = 1
        else:
            if kind in ("num", "name", "op"):
                tokens.append(Token(kind, "^" if s == "**" else s, line, column))
            column += len(s)
        pos = m.end()
    tokens.append(Token("end", "", line, column))
    return tokens


class _PolyParser:
    def __init__(self, tokens: List[Token], ring: PolynomialRing, stop=("end",)):
        self.toks = tokens
        self.i = 0
        self.ring = ring
        self.stop = stop

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.column)

    def expect(self, text):
        t = self.next()
        if t.text != text:
            self.error(f"expected {text!r}, found {t.text or 'end of input'!r}", t)
        return t

    def at_stop(self):
        t = self.peek()
        return t.kind == "end" or (t.kind == "op" and t.text in self.stop)

    def expr(self) -> Polynomial:
        sign = None
        if self.peek().text in ("+", "-"):
            sign = self.next().text
        acc = self.term()
        if sign == "-":
            acc = -acc
        while self.peek().kind == "op" and self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text == "*":
                self.next()
                acc = acc * self.factor()
            elif t.kind == "op" and t.text == "/":
                self.next()
                d = self.factor()
                c = d.coefficient((0,) * self.ring.nvars)
                if len(d) != 1 or not c:
                    self.error("can only divide by a nonzero constant", t)
                acc = acc.scale(self.ring.field.one / c)
            elif t.kind in ("num", "name") or (t.kind == "op" and t.text == "("):
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.peek().text == "^":
            self.next()
            t = self.next()
            if t.kind != "num":
                self.error("exponent must be a non-negative integer", t)
            base = base ** int(t.text)
        return base

    def atom(self) -> Polynomial:
        t = self.next()
        if t.kind == "num":
            return self.ring.constant(self.ring.field.from_int(int(t.text)))
        if t.kind == "name":
            if t.text not in self.ring.variables:
                self.error(f"unknown variable {t.text!r}", t)
            return self.ring.var(t.text)
        if t.text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if t.kind == "op" and t.text == "-":
            return -self.factor()
        self.error(f"unexpected {t.text or 'end of input'!r}", t)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    p = _PolyParser(tokenize(text), ring)
    if p.peek().kind == "end":
        p.error("empty polynomial")
    f = p.expr()
    if p.peek().kind != "end":
        p.error(f"unexpected {p.peek().text!r}")
    return f


def parse_polynomial_list(text: str, ring: PolynomialRing) -> List[Polynomial]:
    """Parse a comma- or semicolon-separated list of polynomials."""
    toks = tokenize(text)
    p = _PolyParser(toks, ring, stop=(",", ";"))
    out = []
    while p.peek().kind != "end":
        out.append(p.expr())
        if p.peek().text in (",", ";"):
            p.next()
        elif p.peek().kind != "end":
            p.error(f"unexpected {p.peek().text!r}")
    return out


@dataclass
class SystemFile:
    field: Field
    variables: Tuple[str, ...]
    order1: MonomialOrder
    order2: MonomialOrder
    generators: List[Polynomial] = dc_field(default_factory=list)

    @property
    def ring(self) -> PolynomialRing:
        return PolynomialRing(self.field, self.variables)

    def order(self, which: str) -> MonomialOrder:
        if which in ("1", "order1", "source"):
            return self.order1
        if which in ("2", "order2", "target"):
            return self.order2
        raise ValueError(f"unknown order selector {which!r} (use order1 or order2)")

    def format(self) -> str:
        gens = ",\n      ".join(g.format(self.order1) for g in self.generators)
        return (
            f"field {self.field.tag};\n"
            f"vars {' '.join(self.variables)};\n"
            f"order1 {self.order1.describe(self.variables)};\n"
            f"order2 {self.order2.describe(self.variables)};\n"
            f"gens: {gens};\n"
        )


_KEYWORDS = ("field", "vars", "order1", "order2", "gens")


def parse_system(text: str) -> SystemFile:
    tokens = tokenize(text)
    # split into statements at top-level ';'
    stmts: List[List[Token]] = []
    cur: List[Token] = []
    depth = 0
    for t in tokens:
        if t.kind == "end":
            break
        if t.text == "(":
            depth += 1
        elif t.text == ")":
            depth -= 1
        if t.text == ";" and depth == 0:
            if cur:
                stmts.append(cur)
            cur = []
        else:
            cur.append(t)
    if cur:
        stmts.append(cur)

    seen = {}
    for st in stmts:
        head = st[0]
        if head.kind != "name" or head.text not in _KEYWORDS:
            raise ParseError(f"expected one of {', '.join(_KEYWORDS)}, found {head.text!r}",
                             head.line, head.column)
        if head.text in seen:
            raise ParseError(f"duplicate {head.text!r} statement", head.line, head.column)
        seen[head.text] = st
    end = tokens[-1]
    for kw in _KEYWORDS:
        if kw not in seen:
            raise ParseError(f"missing {kw!r} statement", end.line, end.column)

    st = seen["field"]
    if len(st) != 2 or st[1].kind != "name":
        raise ParseError("expected: field (gf2|q)", st[0].line, st[0].column)
    try:
        fld = field_by_tag(st[1].text)
    except ValueError as e:
        raise ParseError(str(e), st[1].line, st[1].column) from None

    st = seen["vars"]
    names = []
    for t in st[1:]:
        if t.kind != "name":
            raise ParseError(f"bad variable name {t.text!r}", t.line, t.column)
        if t.text in names:
            raise ParseError(f"duplicate variable {t.text!r}", t.line, t.column)
        if t.text in _KEYWORDS:
            raise ParseError(f"reserved word {t.text!r} used as variable", t.line, t.column)
        names.append(t.text)
    if not names:
        raise ParseError("vars needs at least one variable", st[0].line, st[0].column)
    ring = PolynomialRing(fld, names)

    orders = []
    for kw in ("order1", "order2"):
        st = seen[kw]
        if len(st) < 2 or st[1].text not in ORDER_KINDS:
            t = st[1] if len(st) > 1 else st[0]
            raise ParseError(f"expected order kind ({'|'.join(ORDER_KINDS)})", t.line, t.column)
        ranking: Optional[List[str]] = None
        if len(st) > 2:
            ranking = []
            for t in st[2:]:
                if t.kind != "name" or t.text not in names:
                    raise ParseError(f"unknown variable {t.text!r} in ranking", t.line, t.column)
                ranking.append(t.text)
            if sorted(ranking) != sorted(names):
                raise ParseError("ranking must list every variable exactly once",
                                 st[2].line, st[2].column)
        orders.append(ring.order(st[1].text, ranking))

    st = seen["gens"]
    if len(st) < 2 or st[1].text != ":":
        t = st[1] if len(st) > 1 else st[0]
        raise ParseError("expected ':' after gens", t.line, t.column)
    body = st[2:] + [Token("end", "", end.line, end.column)]
    if body[0].kind == "end":
        raise ParseError("gens needs at least one generator", st[0].line, st[0].column)
    p = _PolyParser(body, ring, stop=(",",))
    gens = []
    while True:
        start = p.peek()
        g = p.expr()
        if g.is_zero():
            raise ParseError("zero generator rejected", start.line, start.column)
        gens.append(g)
        t = p.peek()
        if t.kind == "end":
            break
        if t.text != ",":
            p.error(f"unexpected {t.text!r}")
        p.next()
    return SystemFile(fld, tuple(names), orders[0], orders[1], gens)
