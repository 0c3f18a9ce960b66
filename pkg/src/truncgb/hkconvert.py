"""Truncation-based Groebner basis conversion.

Each iteration truncates the current basis (terms at least the source
leading term, measured in the target order), runs the extended Buchberger
algorithm on the truncations under the target order, lifts every appended
element back through its cofactor row, and interreduces.  The loop stops
when interreduction gives back the basis it started from.

The procedure is known to be incorrect: its fixpoint need not be a Groebner
basis for the target order.  :attr:`ConversionResult.is_target_gb` records
the independent verdict.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .buchberger import (
    DEFAULT_MAX_PAIRS,
    ExtendedBasisResult,
    PairStrategy,
    dot,
    extended_buchberger,
    reduced_groebner_basis,
    sort_basis,
)
from .polyring import MonomialOrder, Polynomial, ZeroPolynomialError, truncate
from .reduction import interreduce
from .verify import GbVerdict, is_groebner_basis

FIXPOINT = "fixpoint"
ITERATION_CAP = "iteration_cap"


class SourceNotGroebnerError(ValueError):
    """The input is not a Groebner basis for the source order."""

    def __init__(self, verdict: GbVerdict):
        self.verdict = verdict
        super().__init__("input is not a Groebner basis for the source order")


@dataclass
class Iteration:
    number: int
    sources: List[Polynomial]
    truncated: List[Polynomial]
    extended: ExtendedBasisResult
    lifted: List[Polynomial]
    basis: List[Polynomial]


@dataclass
class ConversionTrace:
    order1: MonomialOrder
    order2: MonomialOrder
    strategy: PairStrategy
    iterations: List[Iteration] = field(default_factory=list)
    status: Optional[str] = None

    def format(self) -> str:
        return "".join(line + "\n" for line in self.lines())

    def lines(self):
        o2 = self.order2

        def fmt(p):
            return p.format(o2)

        def mono(p, m):
            return p.ring.format_monomial(m)

        for it in self.iterations:
            yield f"ITERATION {it.number}"
            n = len(it.sources)
            for k, (g, h) in enumerate(zip(it.sources, it.truncated), 1):
                yield f"TRUNC h{k} = {fmt(h)} <- g{k} = {fmt(g)}"
            rows = iter(it.extended.rows)
            basis = it.extended.basis
            for ev in it.extended.pair_log:
                head = f"PAIR ({ev.i + 1},{ev.j + 1}) lcm={mono(basis[0], ev.lcm)}"
                if ev.reduced_to_zero:
                    yield head + " zero"
                    continue
                k = ev.appended + 1
                yield f"{head} -> h{k}"
                row = next(rows)
                yield f"APPEND h{k} = {fmt(basis[ev.appended])} row=[{', '.join(fmt(c) for c in row)}]"
            for k, g in enumerate(it.lifted, n + 1):
                yield f"LIFT g{k} = {fmt(g)}"
            yield f"INTERREDUCE [{', '.join(fmt(g) for g in it.basis)}]"
        if self.status == FIXPOINT:
            yield f"FIXPOINT after {len(self.iterations)} iterations"
        elif self.status == ITERATION_CAP:
            yield f"CAP after {len(self.iterations)} iterations"


@dataclass
class ConversionResult:
    basis: List[Polynomial]
    trace: ConversionTrace
    source_basis: List[Polynomial]
    verdict: Optional[GbVerdict] = None

    @property
    def is_target_gb(self) -> Optional[bool]:
        return None if self.verdict is None else self.verdict.is_gb

    @property
    def status(self) -> str:
        return self.trace.status


def truncate_set(G: Sequence[Polynomial], o1: MonomialOrder, o2: MonomialOrder) -> List[Polynomial]:
    """Elementwise truncation; position k of the result comes from G[k]."""
    out = []
    for g in G:
        if g.is_zero():
            raise ZeroPolynomialError("cannot truncate the zero polynomial")
        out.append(truncate(g, o1, o2))
    return out


def lift(rows: Sequence[Sequence[Polynomial]], source: Sequence[Polynomial]) -> List[Polynomial]:
    """Evaluate cofactor rows over ``source`` followed by the earlier lifts.

    Zero results stay in the list so later rows keep their index meaning.
    """
    ref = list(source)
    lifted = []
    for row in rows:
        if len(row) > len(ref):
            raise ValueError(f"row of length {len(row)} but only {len(ref)} reference polynomials")
        g = dot(row, ref)
        lifted.append(g)
        ref.append(g)
    return lifted


def hk_convert(G1: Sequence[Polynomial], o1: MonomialOrder, o2: MonomialOrder,
               strategy: PairStrategy = PairStrategy(), max_iter: int = 100, *,
               verify_source: bool = True, autocomplete_source: bool = False,
               verify_target: bool = True, check: bool = False,
               max_pairs: int = DEFAULT_MAX_PAIRS) -> ConversionResult:
    """Run the truncation conversion loop from ``o1`` to ``o2``.

    With ``autocomplete_source`` the input is first replaced by its reduced
    Groebner basis for ``o1``; otherwise (unless ``verify_source`` is off) a
    non-basis input raises :class:`SourceNotGroebnerError`.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    G = [g for g in G1 if not g.is_zero()]
    if not G:
        raise ValueError("empty input")
    if autocomplete_source:
        G = sort_basis(reduced_groebner_basis(G, o1), o1)
    elif verify_source:
        verdict = is_groebner_basis(G, o1)
        if not verdict:
            raise SourceNotGroebnerError(verdict)

    source = list(G)
    trace = ConversionTrace(o1, o2, strategy)
    picker = strategy.picker()
    for number in range(1, max_iter + 1):
        H = truncate_set(G, o1, o2)
        ext = extended_buchberger(H, o2, picker=picker, check=check, max_pairs=max_pairs)
        lifted = lift(ext.rows, G)
        basis = interreduce(G + lifted, o2)
        trace.iterations.append(Iteration(number, list(G), H, ext, lifted, basis))
        if set(basis) == set(G):
            trace.status = FIXPOINT
            break
        G = basis
    else:
        trace.status = ITERATION_CAP

    result = ConversionResult(trace.iterations[-1].basis, trace, source)
    if verify_target:
        result.verdict = is_groebner_basis(result.basis, o2)
    return result
