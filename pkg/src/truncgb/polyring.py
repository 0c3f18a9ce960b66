"""Monomials, monomial orders and sparse polynomials over GF(2) or QQ.

A monomial is a plain tuple of exponents aligned with the ring's variable
list.  Polynomials keep their terms in a dict keyed by exponent tuple, so
no monomial order is baked into the storage; every order-dependent view
(leading term, sorted terms, printed form) takes the order explicitly.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .fields import Field, FieldMismatchError

Monomial = Tuple[int, ...]

LEX = "lex"
DEGREVLEX = "degrevlex"
ORDER_KINDS = (LEX, DEGREVLEX)


class ContextMismatchError(ValueError):
    """Raised when objects from different rings/contexts are combined."""


class ZeroPolynomialError(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


# -- monomials ---------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Return a/b; the caller guarantees b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# -- orders ------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """lex or degrevlex with a variable ranking (context indices, greatest first)."""

    kind: str
    ranking: Tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise ValueError(f"ranking {self.ranking} is not a permutation")

    @classmethod
    def lex(cls, nvars: int, ranking: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls(LEX, tuple(range(nvars)) if ranking is None else tuple(ranking))

    @classmethod
    def degrevlex(cls, nvars: int, ranking: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls(DEGREVLEX, tuple(range(nvars)) if ranking is None else tuple(ranking))

    @property
    def nvars(self) -> int:
        return len(self.ranking)

    @property
    def is_natural(self) -> bool:
        return self.ranking == tuple(range(len(self.ranking)))

    def key(self, m: Monomial) -> Tuple[int, ...]:
        """Sort key: m1 < m2 in this order iff key(m1) < key(m2)."""
        r = self.ranking
        if self.kind == LEX:
            return tuple(m[i] for i in r)
        # larger exponent in the least variable makes the monomial smaller
        return (sum(m),) + tuple(-m[i] for i in reversed(r))

    def compare(self, a: Monomial, b: Monomial) -> int:
        if len(a) != self.nvars or len(b) != self.nvars:
            raise ContextMismatchError(
                f"monomials of length {len(a)}, {len(b)} vs order on {self.nvars} variables")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        return max(monos, key=self.key)

    def describe(self, variables: Sequence[str]) -> str:
        if self.is_natural:
            return self.kind
        return self.kind + " " + " ".join(variables[i] for i in self.ranking)


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """Three-way comparison: -1 (a < b), 0, or 1 (a > b)."""
    return order.compare(a, b)


# -- ring and polynomials ------------------------------------------------------

class PolynomialRing:
    """K[v1, ..., vn] for K in {GF(2), QQ}; variables listed greatest first."""

    def __init__(self, field: Field, variables: Sequence[str]):
        variables = tuple(variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.field = field
        self.variables = variables
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}

    def __eq__(self, other):
        if not isinstance(other, PolynomialRing):
            return NotImplemented
        return self.field is other.field and self.variables == other.variables

    def __hash__(self):
        return hash((self.field.tag, self.variables))

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.variables)}]"

    def __reduce__(self):
        return (PolynomialRing, (self.field, self.variables))

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        return self.term(c, (0,) * self.nvars)

    def term(self, coef, mono: Monomial) -> "Polynomial":
        self._check_mono(mono)
        self.field.check(coef)
        return Polynomial(self, {tuple(mono): coef} if coef else {})

    def monomial(self, mono: Monomial) -> "Polynomial":
        return self.term(self.field.one, mono)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def var(self, name: str) -> "Polynomial":
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return self.monomial(tuple(e))

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.var(v) for v in self.variables)

    def from_dict(self, terms: Dict[Monomial, object]) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            self._check_mono(m)
            self.field.check(c)
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial
        return parse_polynomial(text, self)

    def order(self, kind: str, ranking: Optional[Sequence[str]] = None) -> MonomialOrder:
        """Build an order from a kind and variable names listed greatest first."""
        idx = None if ranking is None else [self.index(v) for v in ranking]
        if idx is not None and sorted(idx) != list(range(self.nvars)):
            raise ValueError(f"ranking {list(ranking)} must list every variable exactly once")
        return MonomialOrder(kind, tuple(range(self.nvars)) if idx is None else tuple(idx))

    def check_order(self, order: MonomialOrder):
        if order.nvars != self.nvars:
            raise ContextMismatchError(f"order on {order.nvars} variables used in {self}")

    def _check_mono(self, m):
        if len(m) != self.nvars or any(e < 0 for e in m):
            raise ContextMismatchError(f"bad exponent vector {m} for {self}")

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.variables, m):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Term:
    coef: object
    monomial: Monomial

    def __post_init__(self):
        if not self.coef:
            raise ValueError("a term needs a nonzero coefficient")


class Polynomial:
    """Immutable sparse polynomial; terms are a dict exponent-tuple -> coefficient."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: Dict[Monomial, object]):
        # trusted constructor: terms must already be clean
        self.ring = ring
        self._terms = terms
        self._hash = None

    # -- inspection

    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial):
        return self._terms.get(tuple(m), self.ring.field.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __reduce__(self):
        return (Polynomial, (self.ring, self._terms))

    # -- order-dependent views

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder):
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> Term:
        m = self.leading_monomial(order)
        return Term(self._terms[m], m)

    def sorted_terms(self, order: MonomialOrder):
        """Terms as (monomial, coefficient) pairs, greatest first."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.one / lc)

    # -- arithmetic

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.ring != self.ring:
            if other.ring.field is not self.ring.field:
                raise FieldMismatchError(f"{self.ring.field} vs {other.ring.field}")
            raise ContextMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, int):
            return self.ring.constant(self.ring.field.from_int(other))
        self._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m)
            if s is None:
                terms[m] = c
            else:
                s = s + c
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        if self.ring.field.characteristic == 2:
            return self
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, {m: c * a for m, a in self._terms.items()})

    def mul_term(self, coef, mono: Monomial) -> "Polynomial":
        if not coef:
            return self.ring.zero
        return Polynomial(self.ring, {mono_mul(m, mono): coef * a for m, a in self._terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if len(other._terms) == 1:
            (m, c), = other._terms.items()
            return self.mul_term(c, m)
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- printing

    def format(self, order: Optional[MonomialOrder] = None) -> str:
        """Render terms greatest first; default order is lex on the ring's variable list."""
        if not self._terms:
            return "0"
        if order is None:
            order = MonomialOrder.lex(self.ring.nvars)
        field = self.ring.field
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            negative = field.characteristic == 0 and c < 0
            mag = -c if negative else c
            mono = self.ring.format_monomial(m)
            if mono == "1":
                body = field.format(mag)
            elif mag == field.one:
                body = mono
            else:
                body = f"{field.format(mag)}*{mono}"
            if i == 0:
                out.append("-" + body if negative else body)
            else:
                out.append(("- " if negative else "+ ") + body)
        return " ".join(out)

    def canonical_text(self) -> str:
        return self.format()

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


# -- Groebner-theory constructions ------------------------------------------------

def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    f._check(g)
    return f * g


def term_mul(t: Term, f: Polynomial) -> Polynomial:
    f.ring._check_mono(t.monomial)
    f.ring.field.check(t.coef)
    return f.mul_term(t.coef, t.monomial)


def leading_term(f: Polynomial, order: MonomialOrder) -> Term:
    return f.leading_term(order)


def lcm_of_leading_monomials(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Monomial:
    f._check(g)
    return mono_lcm(f.leading_monomial(order), g.leading_monomial(order))


def s_pair_multipliers(f: Polynomial, g: Polynomial, order: MonomialOrder):
    """Return (lcm, (cf, mf), (cg, mg)) with S(f, g) = cf*mf*f - cg*mg*g."""
    f._check(g)
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    one = f.ring.field.one
    return lcm, (one / f._terms[lf], mono_div(lcm, lf)), (one / g._terms[lg], mono_div(lcm, lg))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """S-polynomial of f and g after scaling both monic."""
    _, (cf, mf), (cg, mg) = s_pair_multipliers(f, g, order)
    return f.mul_term(cf, mf) - g.mul_term(cg, mg)


def truncate(f: Polynomial, o1: MonomialOrder, o2: MonomialOrder) -> Polynomial:
    """Keep the terms of f that are >= LT_o1(f) with respect to o2."""
    lt1 = o2.key(f.leading_monomial(o1))
    return Polynomial(f.ring, {m: c for m, c in f.items() if o2.key(m) >= lt1})
