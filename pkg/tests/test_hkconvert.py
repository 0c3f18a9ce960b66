from pathlib import Path
import random

import pytest

from oracles import random_polynomial, random_ring, sympy_reduced_gb
from truncgb.buchberger import PairStrategy, ScheduleError, reduced_groebner_basis
from truncgb.fields import GF2
from truncgb.hkconvert import (
    FIXPOINT,
    ITERATION_CAP,
    SourceNotGroebnerError,
    hk_convert,
    lift,
    truncate_set,
)
from truncgb.polyring import MonomialOrder, PolynomialRing, ZeroPolynomialError
from truncgb.reduction import normal_form
from truncgb.scenarios import SCENARIOS

GOLDEN = Path(__file__).parent / "golden"


def test_truncate_set(ex1):
    assert truncate_set([ex1.g1, ex1.g2], ex1.o1, ex1.o2) == [ex1.h1, ex1.h2]
    assert truncate_set([ex1.g1, ex1.g2, ex1.g3], ex1.o1, ex1.o2) == [ex1.h1, ex1.h2, ex1.h3]
    monos = [ex1.y4, ex1.h2]
    assert truncate_set(monos, ex1.o1, ex1.o2) == monos
    with pytest.raises(ZeroPolynomialError):
        truncate_set([ex1.g1, ex1.ring.zero], ex1.o1, ex1.o2)


def test_lift_examples(ex1):
    P = ex1.ring.parse
    assert lift([[P("z + 1"), P("x")]], [ex1.g1, ex1.g2]) == [ex1.g3]
    assert lift([[P("z + 1"), P("x"), P("1")]], [ex1.g1, ex1.g2, ex1.g3]) == [ex1.ring.zero]
    g4 = ex1.ring.zero
    assert lift([[P("1"), P("0"), P("1"), P("z")]], [ex1.g1, ex1.g2, ex1.g3, g4]) == [ex1.g5]


def test_lift_keeps_zeros_for_alignment(ex1):
    P = ex1.ring.parse
    rows = [[P("z + 1"), P("x"), P("1")], [P("1"), P("0"), P("1"), P("z")]]
    assert lift(rows, [ex1.g1, ex1.g2, ex1.g3]) == [ex1.ring.zero, ex1.g5]


def test_lift_row_too_long(ex1):
    with pytest.raises(ValueError):
        lift([[ex1.ring.one] * 3], [ex1.g1, ex1.g2])


def test_ex1_counterexample(ex1):
    r = hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2, PairStrategy.min_lcm(), check=True)
    assert r.basis == [ex1.g1, ex1.g2, ex1.g3]
    assert r.status == FIXPOINT and len(r.trace.iterations) == 2
    assert r.is_target_gb is False
    assert r.verdict.witness.remainder == ex1.y4


def test_ex1_trace_matches_golden(ex1):
    r = hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2, PairStrategy.min_lcm())
    assert r.trace.format() == (GOLDEN / "ex1.trace").read_text()


def test_ex1_iterations_event_by_event(ex1):
    P = ex1.ring.parse
    it1, it2 = hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2).trace.iterations
    assert it1.truncated == [ex1.h1, ex1.h2]
    assert it1.extended.appended == [ex1.h3_iter1]
    assert it1.extended.rows == [[P("z + 1"), P("x")]]
    assert it1.lifted == [ex1.g3]
    assert it1.basis == [ex1.g1, ex1.g2, ex1.g3]

    assert it2.truncated == [ex1.h1, ex1.h2, ex1.h3]
    first_productive = next(e for e in it2.extended.pair_log if not e.reduced_to_zero)
    assert (first_productive.i, first_productive.j) == (0, 1)
    assert it2.extended.appended == [ex1.h4]
    assert it2.extended.rows == [[P("z + 1"), P("x"), P("1")]]
    zero_pairs = {(e.i, e.j) for e in it2.extended.pair_log if e.reduced_to_zero}
    assert (0, 2) in zero_pairs
    assert it2.lifted == [ex1.ring.zero]
    assert it2.basis == [ex1.g1, ex1.g2, ex1.g3]


def test_ex1_alt_schedule(ex1):
    r = hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2,
                   PairStrategy.explicit([], [(1, 3), (1, 2)], fallback=True), check=True)
    assert r.is_target_gb
    assert ex1.y4 in r.basis
    assert set(r.basis) == {ex1.g1, ex1.g2, ex1.g3, ex1.y4}
    assert r.trace.format() == (GOLDEN / "ex1-alt.trace").read_text()


def test_strict_schedule_runs_out(ex1):
    with pytest.raises(ScheduleError):
        hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2, PairStrategy.explicit([], [(1, 3)]))


def test_trivial_conversion():
    R = PolynomialRing(GF2, "xy")
    G = [R.parse("x + 1"), R.parse("y + 1")]
    r = hk_convert(G, MonomialOrder.degrevlex(2), MonomialOrder.lex(2))
    assert r.basis == G and len(r.trace.iterations) == 1 and r.status == FIXPOINT
    assert r.is_target_gb


def test_source_precondition(ex1):
    bad = [ex1.g1, ex1.g1 * ex1.ring.parse("x") + ex1.g2]
    with pytest.raises(SourceNotGroebnerError):
        hk_convert(bad, ex1.o1, ex1.o2)
    r = hk_convert(bad, ex1.o1, ex1.o2, autocomplete_source=True)
    assert r.source_basis == reduced_groebner_basis(bad, ex1.o1)


def test_iteration_cap(ex1):
    r = hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2, max_iter=1)
    assert r.status == ITERATION_CAP
    assert "CAP after 1 iterations" in r.trace.format()
    with pytest.raises(ValueError):
        hk_convert([ex1.g1, ex1.g2], ex1.o1, ex1.o2, max_iter=0)


@pytest.mark.parametrize("sid", ["ex4-f2", "ex4-q"])
def test_ex4_fails_but_keeps_the_ideal(sid):
    sc = SCENARIOS[sid]
    s = sc.system()
    r = hk_convert(s.generators, s.order1, s.order2, PairStrategy.min_lcm(),
                   autocomplete_source=True, check=True)
    assert r.status == FIXPOINT
    assert r.is_target_gb is False
    target = set(reduced_groebner_basis(s.generators, s.order2))
    assert target == sympy_reduced_gb(s.generators, s.order2)
    assert set(reduced_groebner_basis(r.basis, s.order2)) == target


def _assert_run_invariants(G1, o1, o2, strategy):
    r = hk_convert(G1, o1, o2, strategy, max_iter=20, check=True)
    target = reduced_groebner_basis(G1, o2)
    for it in r.trace.iterations:
        for g, h in zip(it.sources, it.truncated):
            assert h.leading_monomial(o2) == g.leading_monomial(o2)
            assert h.leading_monomial(o1) == g.leading_monomial(o1)
        for g in it.lifted:
            assert normal_form(g, target, o2).is_zero()
        ref = it.sources + it.lifted
        for k, row in enumerate(it.extended.rows):
            acc = sum((c * b for c, b in zip(row, ref)), G1[0].ring.zero)
            assert acc == it.lifted[k]
    assert set(reduced_groebner_basis(r.basis, o2)) == set(target)


def test_random_conversion_invariants():
    rng = random.Random(3)
    runs = 0
    while runs < 40:
        R = random_ring(rng, nvars=rng.randint(2, 3))
        o1, o2 = MonomialOrder.degrevlex(R.nvars), MonomialOrder.lex(R.nvars)
        F = [f for f in (random_polynomial(rng, R, 3, 2) for _ in range(rng.randint(1, 3))) if f]
        if not F:
            continue
        G1 = reduced_groebner_basis(F, o1)
        _assert_run_invariants(G1, o1, o2, PairStrategy.random(runs))
        runs += 1
