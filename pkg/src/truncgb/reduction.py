"""Multivariate division, normal forms and interreduction."""

from dataclasses import dataclass
import heapq
from typing import Callable, List, Optional, Sequence

from .polyring import (
    MonomialOrder,
    Polynomial,
    ZeroPolynomialError,
    mono_div,
    mono_divides,
    mono_mul,
)

# (monomial being reduced, indices of divisors whose LM divides it) -> chosen index
DivisorSelector = Callable[[tuple, List[int]], int]


def first_divisor(mono, candidates):
    return candidates[0]


@dataclass
class DivisionResult:
    quotients: List[Polynomial]
    remainder: Polynomial


def _neg_key(order, m):
    return tuple(-k for k in order.key(m))


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder,
           select: Optional[DivisorSelector] = None) -> DivisionResult:
    """Full division of f by an ordered list of divisors.

    The greatest remaining term is reduced by the first divisor (in list
    order) whose leading monomial divides it; irreducible terms move to the
    remainder.  ``select`` overrides the first-divisor rule.
    """
    ring = f.ring
    ring.check_order(order)
    prepared = []
    for d in divisors:
        f._check(d)
        if d.is_zero():
            raise ZeroPolynomialError("division by the zero polynomial")
        lm = d.leading_monomial(order)
        lc = d._terms[lm]
        tail = [(m, c) for m, c in d.items() if m != lm]
        prepared.append((lm, lc, tail))

    one = ring.field.one
    work = dict(f._terms)
    heap = [(_neg_key(order, m), m) for m in work]
    heapq.heapify(heap)
    rem = {}
    quots = [{} for _ in prepared]
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        hits = [i for i, (lm, _, _) in enumerate(prepared) if mono_divides(lm, m)]
        if not hits:
            rem[m] = c
            continue
        i = (select or first_divisor)(m, hits)
        lm, lc, tail = prepared[i]
        t = mono_div(m, lm)
        q = c if lc == one else c / lc
        s = quots[i].get(t)
        s = q if s is None else s + q
        if s:
            quots[i][t] = s
        else:
            quots[i].pop(t, None)
        for dm, dc in tail:
            nm = mono_mul(dm, t)
            old = work.get(nm)
            if old is None:
                work[nm] = -(q * dc)
                heapq.heappush(heap, (_neg_key(order, nm), nm))
            else:
                v = old - q * dc
                if v:
                    work[nm] = v
                else:
                    del work[nm]
    return DivisionResult([Polynomial(ring, q) for q in quots], Polynomial(ring, rem))


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder,
                select: Optional[DivisorSelector] = None) -> Polynomial:
    return divide(f, [g for g in G], order, select).remainder


def interreduce(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Autoreduce G: drop zeros, make monic, reduce each element by the others.

    Elements are visited in ascending leading-monomial order until nothing
    changes; among equal leading monomials the later input is visited (and
    so reduced away) first.  The result lists each surviving element at the
    position of the input element it came from.
    """
    items = [[pos, p.monic(order)] for pos, p in enumerate(G) if not p.is_zero()]
    changed = True
    while changed:
        changed = False
        items.sort(key=lambda it: (order.key(it[1].leading_monomial(order)), -it[0]))
        k = 0
        while k < len(items):
            p = items[k][1]
            others = [q for j, (_, q) in enumerate(items) if j != k]
            r = normal_form(p, others, order) if others else p
            if r == p:
                k += 1
                continue
            changed = True
            if r.is_zero():
                del items[k]
            else:
                items[k][1] = r.monic(order)
                k += 1
    items.sort(key=lambda it: it[0])
    return [p for _, p in items]


def is_interreduced(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    for k, p in enumerate(G):
        if p.is_zero() or p.leading_coefficient(order) != p.ring.field.one:
            return False
        others = [q.leading_monomial(order) for j, q in enumerate(G) if j != k]
        if any(mono_divides(lm, m) for m in p.monomials() for lm in others):
            return False
    return True
