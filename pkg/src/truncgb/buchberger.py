"""Buchberger's algorithm with pluggable pair selection and cofactor tracking.

The extended variant records, for every element it appends, the row of
cofactors expressing it over the working basis as it stood at that moment
(inputs first, then earlier appended elements).  No pair criteria are
applied there: every pair is reduced and zero reductions are logged and
dropped.  :func:`reduced_groebner_basis` is the tuned oracle used by the
checks; it applies the usual pair criteria.
"""

from dataclasses import dataclass, field
import random
import re
from typing import List, Optional, Sequence, Tuple

from .polyring import (
    MonomialOrder,
    Polynomial,
    mono_coprime,
    mono_divides,
    mono_lcm,
    s_pair_multipliers,
    s_polynomial,
)
from .reduction import divide, interreduce, normal_form

MIN_LCM_FIRST = "min_lcm_first"
FIFO = "fifo"
EXPLICIT_SCHEDULE = "explicit_schedule"
SEEDED_RANDOM = "seeded_random"
STRATEGY_KINDS = (MIN_LCM_FIRST, FIFO, EXPLICIT_SCHEDULE, SEEDED_RANDOM)

DEFAULT_MAX_PAIRS = 100_000


class ScheduleError(ValueError):
    """An explicit schedule names a pair that is not in the queue, or ran out."""


class PairLimitError(RuntimeError):
    """The pair budget of one Buchberger run was exceeded."""


@dataclass(frozen=True)
class PairStrategy:
    kind: str = MIN_LCM_FIRST
    # explicit_schedule: one tuple of 0-based (i, j) picks per Buchberger round
    schedule: Tuple[Tuple[Tuple[int, int], ...], ...] = ()
    seed: Optional[int] = None
    # explicit_schedule: continue with min_lcm_first once the picks run out
    fallback: bool = False

    def __post_init__(self):
        if self.kind not in STRATEGY_KINDS:
            raise ValueError(f"unknown pair strategy {self.kind!r}")
        if self.kind == SEEDED_RANDOM and self.seed is None:
            raise ValueError("seeded_random needs a seed")
        for rnd in self.schedule:
            for i, j in rnd:
                if not 0 <= i < j:
                    raise ValueError(f"bad schedule pick ({i + 1},{j + 1})")

    @classmethod
    def min_lcm(cls):
        return cls(MIN_LCM_FIRST)

    @classmethod
    def fifo(cls):
        return cls(FIFO)

    @classmethod
    def random(cls, seed: int):
        return cls(SEEDED_RANDOM, seed=seed)

    @classmethod
    def explicit(cls, *rounds, fallback=False):
        """Rounds of 1-based (i, j) picks, e.g. ``explicit([], [(1, 3)], fallback=True)``."""
        return cls(EXPLICIT_SCHEDULE,
                   schedule=tuple(tuple((min(p) - 1, max(p) - 1) for p in r) for r in rounds),
                   fallback=fallback)

    def picker(self) -> "PairPicker":
        return PairPicker(self)

    def __str__(self):
        if self.kind == MIN_LCM_FIRST:
            return "minlcm"
        if self.kind == FIFO:
            return "fifo"
        if self.kind == SEEDED_RANDOM:
            return f"random:{self.seed}"
        rounds = "/".join(",".join(f"{i + 1}-{j + 1}" for i, j in r) for r in self.schedule)
        return f"schedule:{rounds}" + ("+minlcm" if self.fallback else "")


_PICK_RE = re.compile(r"\s*\(?\s*(\d+)\s*[-,]\s*(\d+)\s*\)?\s*$")


def parse_strategy(text: str) -> PairStrategy:
    """Parse ``minlcm | fifo | schedule:<rounds>[+minlcm] | random:<seed>``.

    Rounds are separated by ``/`` and picks by ``,``; a pick is a 1-based
    pair ``i-j``.  ``schedule:/1-3,1-2+minlcm`` leaves round 1 to min-lcm,
    forces S(1,3) then S(1,2) in round 2, and falls back to min-lcm after.
    """
    text = text.strip()
    if text in ("minlcm", "min_lcm_first"):
        return PairStrategy.min_lcm()
    if text == "fifo":
        return PairStrategy.fifo()
    if text.startswith("random:"):
        try:
            return PairStrategy.random(int(text[7:]))
        except ValueError:
            raise ValueError(f"bad random seed in {text!r}") from None
    if text.startswith("schedule:"):
        body = text[9:]
        fallback = body.endswith("+minlcm")
        if fallback:
            body = body[:-7]
        rounds = []
        for r in body.split("/"):
            picks = []
            for tok in filter(None, (s.strip() for s in r.split(","))):
                m = _PICK_RE.match(tok)
                if not m or int(m.group(1)) < 1 or int(m.group(1)) == int(m.group(2)):
                    raise ValueError(f"bad schedule pick {tok!r}")
                picks.append((int(m.group(1)), int(m.group(2))))
            rounds.append(picks)
        return PairStrategy.explicit(*rounds, fallback=fallback)
    raise ValueError(f"unknown strategy {text!r} (minlcm | fifo | schedule:<list> | random:<seed>)")


@dataclass(frozen=True)
class Pair:
    i: int
    j: int
    lcm: tuple
    serial: int


class PairPicker:
    """Stateful selection for one run; hk conversion shares it across rounds."""

    def __init__(self, strategy: PairStrategy):
        self.strategy = strategy
        self.round = -1
        self._cursor = 0
        self._rng = random.Random(strategy.seed) if strategy.kind == SEEDED_RANDOM else None

    def start_round(self):
        self.round += 1
        self._cursor = 0

    def pick(self, queue: Sequence[Pair], order: MonomialOrder) -> int:
        """Index into ``queue`` of the next pair to process."""
        if not queue:
            raise ValueError("empty pair queue")
        kind = self.strategy.kind
        if kind == FIFO:
            return min(range(len(queue)), key=lambda k: queue[k].serial)
        if kind == SEEDED_RANDOM:
            return self._rng.randrange(len(queue))
        if kind == EXPLICIT_SCHEDULE:
            sched = self.strategy.schedule
            rnd = sched[self.round] if 0 <= self.round < len(sched) else ()
            if self._cursor < len(rnd):
                want = rnd[self._cursor]
                self._cursor += 1
                for k, p in enumerate(queue):
                    if (p.i, p.j) == want:
                        return k
                raise ScheduleError(
                    f"round {self.round + 1}: pair ({want[0] + 1},{want[1] + 1}) is not pending")
            if not self.strategy.fallback:
                raise ScheduleError(f"round {self.round + 1}: explicit schedule exhausted")
        return min(range(len(queue)), key=lambda k: (order.key(queue[k].lcm), queue[k].i, queue[k].j))


def next_pair(queue: Sequence[Pair], order: MonomialOrder, strategy) -> Pair:
    """Return the pair a strategy (or a running picker) would process next."""
    picker = strategy if isinstance(strategy, PairPicker) else strategy.picker()
    if picker.round < 0:
        picker.start_round()
    return queue[picker.pick(queue, order)]


@dataclass
class PairEvent:
    i: int
    j: int
    lcm: tuple
    reduced_to_zero: bool
    appended: Optional[int] = None  # basis index of the new element
    skipped: bool = False  # dropped by the product criterion (plain variant only)


@dataclass
class ExtendedBasisResult:
    basis: List[Polynomial]
    n_inputs: int
    rows: List[List[Polynomial]] = field(default_factory=list)
    pair_log: List[PairEvent] = field(default_factory=list)

    @property
    def appended(self) -> List[Polynomial]:
        return self.basis[self.n_inputs:]


def dot(row: Sequence[Polynomial], basis: Sequence[Polynomial]) -> Polynomial:
    if len(row) > len(basis):
        raise ValueError(f"row of length {len(row)} over a basis of {len(basis)}")
    acc = basis[0].ring.zero if basis else None
    for c, b in zip(row, basis):
        if not c.is_zero():
            acc = acc + c * b
    return acc


def _run(F, order, strategy, *, picker=None, track=True, product_criterion=False,
         max_pairs=DEFAULT_MAX_PAIRS, check=False) -> ExtendedBasisResult:
    basis = [f for f in F if not f.is_zero()]
    if not basis:
        raise ValueError("Buchberger needs at least one nonzero polynomial")
    ring = basis[0].ring
    for f in basis:
        f._check(basis[0])
    ring.check_order(order)
    if picker is None:
        picker = strategy.picker()
    picker.start_round()

    lms = [f.leading_monomial(order) for f in basis]
    n = len(basis)
    queue = [(i, j) for i in range(n) for j in range(i + 1, n)]
    queue = [Pair(i, j, mono_lcm(lms[i], lms[j]), s) for s, (i, j) in enumerate(queue)]
    serial = len(queue)

    result = ExtendedBasisResult(basis, len(basis))
    processed = 0
    while queue:
        k = picker.pick(queue, order)
        p = queue.pop(k)
        processed += 1
        if processed > max_pairs:
            raise PairLimitError(f"more than {max_pairs} pairs processed")
        if product_criterion and mono_coprime(lms[p.i], lms[p.j]):
            result.pair_log.append(PairEvent(p.i, p.j, p.lcm, True, skipped=True))
            continue
        f, g = basis[p.i], basis[p.j]
        _, (cf, mf), (cg, mg) = s_pair_multipliers(f, g, order)
        s = f.mul_term(cf, mf) - g.mul_term(cg, mg)
        div = divide(s, basis, order)
        r = div.remainder
        if r.is_zero():
            result.pair_log.append(PairEvent(p.i, p.j, p.lcm, True))
            continue
        lc = r.leading_coefficient(order)
        inv_lc = ring.field.one / lc
        r = r.scale(inv_lc)
        if track:
            row = [-q for q in div.quotients]
            row[p.i] = row[p.i] + ring.term(cf, mf)
            row[p.j] = row[p.j] - ring.term(cg, mg)
            row = [c.scale(inv_lc) for c in row]
            if check and dot(row, basis) != r:
                raise AssertionError("cofactor row does not reproduce the appended element")
            result.rows.append(row)
        new = len(basis)
        basis.append(r)
        lms.append(r.leading_monomial(order))
        result.pair_log.append(PairEvent(p.i, p.j, p.lcm, False, appended=new))
        for i in range(new):
            queue.append(Pair(i, new, mono_lcm(lms[i], lms[new]), serial))
            serial += 1
    return result


def extended_buchberger(F: Sequence[Polynomial], order: MonomialOrder,
                        strategy: PairStrategy = PairStrategy(), *, picker=None,
                        max_pairs=DEFAULT_MAX_PAIRS, check=False) -> ExtendedBasisResult:
    """Buchberger under ``order`` recording a cofactor row for each appended element."""
    return _run(F, order, strategy, picker=picker, track=True, max_pairs=max_pairs, check=check)


def buchberger(F: Sequence[Polynomial], order: MonomialOrder,
               strategy: PairStrategy = PairStrategy(), *, product_criterion=False,
               max_pairs=DEFAULT_MAX_PAIRS) -> List[Polynomial]:
    """Plain Buchberger: the inputs (zeros dropped) followed by the appended elements."""
    return _run(F, order, strategy, track=False, product_criterion=product_criterion,
                max_pairs=max_pairs).basis


def sort_basis(G: Sequence[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Descending leading monomial, ties by canonical text."""
    return sorted(G, key=lambda g: (order.key(g.leading_monomial(order)), g.canonical_text()),
                  reverse=True)


def reduced_groebner_basis(F: Sequence[Polynomial], order: MonomialOrder,
                           strategy: PairStrategy = PairStrategy(), *,
                           max_pairs=DEFAULT_MAX_PAIRS) -> List[Polynomial]:
    """The reduced Groebner basis of <F>, sorted by descending leading monomial.

    This is the tuned variant used by the checks and by source-side
    completion.  The working basis is kept minimal: when a new element's
    leading monomial divides that of an older one, the older one leaves the
    basis (with its pairs), is fed back in, and stays available as a
    reducer.  Pairs with coprime leading monomials are skipped.  Before
    returning, the inputs and every pair of the final basis are reduced
    against that basis alone, and any nonzero remainder restarts the loop.
    ``strategy`` decides which pending pair is
    reduced next; the result does not depend on it.
    """
    pending = [f for f in F if not f.is_zero()]
    if not pending:
        raise ValueError("Buchberger needs at least one nonzero polynomial")
    for f in pending:
        f._check(pending[0])
    pending[0].ring.check_order(order)

    polys: List[Polynomial] = []
    lms: List[tuple] = []
    G: List[int] = []
    B: List[Pair] = []
    serial = 0

    def basis_nf(f, skip=None):
        ks = [k for k in range(len(polys)) if k != skip]
        return normal_form(f, [polys[k] for k in ks], order) if ks else f

    def leftovers():
        # the retired reducers are a heuristic; the final basis must stand alone
        cur = [polys[k] for k in G]
        out = [normal_form(f, cur, order) for f in F if not f.is_zero()]
        for a, i in enumerate(G):
            for j in G[a + 1:]:
                if not mono_coprime(lms[i], lms[j]):
                    out.append(normal_form(s_polynomial(polys[i], polys[j], order), cur, order))
        return [(r, None) for r in out if not r.is_zero()]

    work = [(f, None) for f in pending]
    picker = strategy.picker()
    picker.start_round()
    processed = 0
    while True:
        while work:
            f, skip = work.pop(0)
            h = basis_nf(f, skip)
            if h.is_zero():
                continue
            h = h.monic(order)
            mh = h.leading_monomial(order)
            ih = len(polys)
            polys.append(h)
            lms.append(mh)
            removed = [k for k in G if mono_divides(mh, lms[k])]
            work.extend((polys[k], k) for k in removed)
            G = [k for k in G if k not in removed]
            B = [p for p in B if p.i not in removed and p.j not in removed]
            for k in G:
                if not mono_coprime(lms[k], mh):
                    B.append(Pair(k, ih, mono_lcm(lms[k], mh), serial))
                    serial += 1
            G.append(ih)
        if not B:
            work = leftovers()
            if not work:
                return sort_basis(interreduce([polys[k] for k in G], order), order)
            continue
        p = B.pop(picker.pick(B, order))
        processed += 1
        if processed > max_pairs:
            raise PairLimitError(f"more than {max_pairs} pairs processed")
        r = basis_nf(s_polynomial(polys[p.i], polys[p.j], order))
        if not r.is_zero():
            work.append((r, None))
