"""Truncation-based Groebner basis conversion over GF(2) and QQ."""

from .fields import GF2, QQ
from .polyring import MonomialOrder, Polynomial, PolynomialRing, truncate
from .buchberger import (
    PairStrategy,
    buchberger,
    extended_buchberger,
    parse_strategy,
    reduced_groebner_basis,
)
from .reduction import divide, interreduce, normal_form
from .hkconvert import hk_convert, lift, truncate_set
from .verify import ideal_member, is_groebner_basis, same_ideal
from .parsing import parse_system

__all__ = [
    "GF2", "QQ", "MonomialOrder", "Polynomial", "PolynomialRing", "truncate",
    "PairStrategy", "buchberger", "extended_buchberger", "parse_strategy",
    "reduced_groebner_basis", "divide", "interreduce", "normal_form",
    "hk_convert", "lift", "truncate_set", "ideal_member", "is_groebner_basis",
    "same_ideal", "parse_system",
]
