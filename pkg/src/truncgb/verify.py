"""Groebner basis checking, ideal membership and ideal equality.

The checker runs its own S-pair loop over :func:`divide`; it shares only
the polynomial and division primitives with the Buchberger code it checks.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .buchberger import reduced_groebner_basis
from .polyring import Polynomial, MonomialOrder, mono_lcm, s_polynomial
from .reduction import normal_form


class NotAGroebnerBasisError(ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    i: int  # 0-based basis indices
    j: int
    remainder: Polynomial


@dataclass(frozen=True)
class GbVerdict:
    is_gb: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.is_gb


def _check_input(G):
    G = list(G)
    if not G:
        raise ValueError("empty basis")
    if any(g.is_zero() for g in G):
        raise ValueError("zero polynomial in basis")
    return G


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder) -> GbVerdict:
    """Buchberger criterion; the first failing pair in min-lcm order is the witness."""
    G = _check_input(G)
    lms = [g.leading_monomial(order) for g in G]
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    pairs.sort(key=lambda p: (order.key(mono_lcm(lms[p[0]], lms[p[1]])), p))
    for i, j in pairs:
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if not r.is_zero():
            return GbVerdict(False, Witness(i, j, r))
    return GbVerdict(True)


def ideal_member(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    G = _check_input(G)
    if not is_groebner_basis(G, order):
        raise NotAGroebnerBasisError("membership test needs a Groebner basis")
    return normal_form(f, G, order).is_zero()


def same_ideal(F: Sequence[Polynomial], G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    return set(reduced_groebner_basis(F, order)) == set(reduced_groebner_basis(G, order))
