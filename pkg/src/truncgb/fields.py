"""Exact coefficient fields: GF(2) and the rationals.

Elements of GF(2) are :class:`GF2Element` instances (two interned values),
rationals are :class:`fractions.Fraction`.  Both fields are reached through
the :class:`Field` objects ``GF2`` and ``QQ`` so that higher layers never
branch on the concrete coefficient type.
"""

from fractions import Fraction
import re


class FieldMismatchError(TypeError):
    """Raised when elements of different fields are combined."""


class GF2Element:
    __slots__ = ("value",)

    def __new__(cls, value=0):
        return _GF2_VALUES[int(value) & 1]

    def _check(self, other):
        if isinstance(other, GF2Element):
            return other
        raise FieldMismatchError(f"cannot combine GF(2) element with {type(other).__name__}")

    def __add__(self, other):
        return _GF2_VALUES[self.value ^ self._check(other).value]

    __sub__ = __add__

    def __mul__(self, other):
        return _GF2_VALUES[self.value & self._check(other).value]

    def __neg__(self):
        return self

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError("0 has no inverse in GF(2)")
        return self

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, GF2Element):
            return self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(("GF2", self.value))

    def __reduce__(self):
        return (GF2Element, (self.value,))

    def __repr__(self):
        return f"GF2({self.value})"

    def __str__(self):
        return str(self.value)


_GF2_VALUES = (object.__new__(GF2Element), object.__new__(GF2Element))
_GF2_VALUES[0].value = 0
_GF2_VALUES[1].value = 1


_COEFF_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Field:
    """A coefficient field; subclasses fix the element type."""

    name = ""
    tag = ""
    characteristic = 0

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_field_by_tag, (self.tag,))

    def contains(self, a) -> bool:
        raise NotImplementedError

    def check(self, *elems):
        for a in elems:
            if not self.contains(a):
                raise FieldMismatchError(f"{a!r} is not an element of {self.name}")

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return self.from_int(num) / self.from_int(den)

    def parse(self, text: str):
        """Parse ``n`` or ``p/q`` into a field element."""
        m = _COEFF_RE.match(text)
        if not m:
            raise ValueError(f"bad coefficient {text!r}")
        num = int(m.group(1))
        if m.group(2) is None:
            return self.from_int(num)
        return self.from_fraction(num, int(m.group(2)))

    def format(self, a) -> str:
        return str(a)


class _GF2Field(Field):
    name = "GF(2)"
    tag = "gf2"
    characteristic = 2

    zero = _GF2_VALUES[0]
    one = _GF2_VALUES[1]

    def contains(self, a):
        return isinstance(a, GF2Element)

    def from_int(self, n):
        return _GF2_VALUES[n & 1]

    def from_fraction(self, num, den):
        if den % 2 == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in GF(2)")
        return _GF2_VALUES[num & 1]


class _RationalField(Field):
    name = "QQ"
    tag = "q"
    characteristic = 0

    zero = Fraction(0)
    one = Fraction(1)

    def contains(self, a):
        return isinstance(a, Fraction)

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, num, den):
        return Fraction(num, den)


GF2 = _GF2Field()
QQ = _RationalField()

FIELDS = {GF2.tag: GF2, QQ.tag: QQ}


def _field_by_tag(tag):
    return FIELDS[tag]


def field_by_tag(tag: str) -> Field:
    try:
        return FIELDS[tag]
    except KeyError:
        raise ValueError(f"unknown field tag {tag!r} (expected one of {', '.join(FIELDS)})") from None


def field_of(a) -> Field:
    if isinstance(a, GF2Element):
        return GF2
    if isinstance(a, Fraction):
        return QQ
    raise FieldMismatchError(f"{a!r} is not a field element")


def _same_field(a, b) -> Field:
    fa, fb = field_of(a), field_of(b)
    if fa is not fb:
        raise FieldMismatchError(f"field mismatch: {fa} vs {fb}")
    return fa


def add(a, b):
    _same_field(a, b)
    return a + b


def mul(a, b):
    _same_field(a, b)
    return a * b


def neg(a):
    field_of(a)
    return -a


def inv(a):
    if isinstance(a, GF2Element):
        return a.inverse()
    field_of(a)
    if not a:
        raise ZeroDivisionError("0 has no inverse")
    return 1 / a
