import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import random_order, random_polynomial, random_ring, sympy_reduced_gb
from truncgb.buchberger import (
    Pair,
    PairLimitError,
    PairStrategy,
    ScheduleError,
    buchberger,
    dot,
    extended_buchberger,
    next_pair,
    parse_strategy,
    reduced_groebner_basis,
)
from truncgb.polyring import s_polynomial
from truncgb.reduction import normal_form
from truncgb.verify import is_groebner_basis


def test_buchberger_iteration1(ex1):
    out = buchberger([ex1.h1, ex1.h2], ex1.o2, PairStrategy.min_lcm())
    assert out == [ex1.h1, ex1.h2, ex1.h3_iter1]


def test_buchberger_coprime_source(ex1):
    assert buchberger([ex1.g1, ex1.g2], ex1.o1) == [ex1.g1, ex1.g2]


def test_buchberger_single_monomial(ex1):
    assert buchberger([ex1.y4], ex1.o2) == [ex1.y4]


def test_buchberger_rejects_all_zero(ex1):
    with pytest.raises(ValueError):
        buchberger([ex1.ring.zero], ex1.o2)


def test_extended_iteration1_row(ex1):
    res = extended_buchberger([ex1.h1, ex1.h2], ex1.o2, check=True)
    assert res.appended == [ex1.h3_iter1]
    assert res.rows == [[ex1.ring.parse("z + 1"), ex1.ring.parse("x")]]


def test_extended_iteration2_rows(ex1):
    P = ex1.ring.parse
    res = extended_buchberger([ex1.h1, ex1.h2, ex1.h3], ex1.o2, PairStrategy.min_lcm(), check=True)
    assert res.appended[0] == ex1.h4
    assert res.rows[0] == [P("z + 1"), P("x"), P("1")]
    # S(h1, h4) = x + y^2 z + y^2 reduces to zero, so nothing else is appended
    assert len(res.appended) == 1
    log = [(e.i + 1, e.j + 1, e.reduced_to_zero) for e in res.pair_log]
    assert log.index((1, 2, False)) < log.index((1, 3, True))
    assert (1, 4, True) in log


def test_extended_already_gb(ex1):
    res = extended_buchberger([ex1.g1, ex1.g2], ex1.o1)
    assert res.appended == [] and res.rows == []


def test_pair_limit(ex1):
    with pytest.raises(PairLimitError):
        buchberger([ex1.h1, ex1.h2], ex1.o2, max_pairs=1)


def test_reduced_gb_examples(ex1):
    assert set(reduced_groebner_basis([ex1.g1, ex1.g2], ex1.o1)) == {ex1.g1, ex1.g2}
    expected = {ex1.g1, ex1.g2, ex1.g3, ex1.y4}
    assert set(reduced_groebner_basis([ex1.g1, ex1.g2], ex1.o2)) == expected
    assert sympy_reduced_gb([ex1.g1, ex1.g2], ex1.o2) == expected
    assert reduced_groebner_basis([ex1.ring.one], ex1.o2) == [ex1.ring.one]


def test_next_pair(ex1):
    q = [Pair(0, 1, (1, 0, 2), 0), Pair(0, 2, (1, 2, 1), 1)]
    assert next_pair(q, ex1.o2, PairStrategy.min_lcm()) == q[0]
    sched = PairStrategy.explicit([(1, 3), (1, 2)])
    assert next_pair(q, ex1.o2, sched) == q[1]
    assert next_pair(q[:1], ex1.o2, PairStrategy.fifo()) == q[0]
    assert next_pair(q[1:], ex1.o2, PairStrategy.random(5)) == q[1]


def test_min_lcm_ties_by_index(ex1):
    q = [Pair(2, 3, (1, 2, 1), 0), Pair(0, 2, (1, 2, 1), 1)]
    assert next_pair(q, ex1.o2, PairStrategy.min_lcm()) == q[1]


def test_fifo_picks_oldest(ex1):
    q = [Pair(0, 3, (0, 0, 1), 5), Pair(1, 2, (9, 0, 0), 2)]
    assert next_pair(q, ex1.o2, PairStrategy.fifo()) == q[1]


def test_schedule_errors(ex1):
    with pytest.raises(ScheduleError, match="exhausted"):
        buchberger([ex1.h1, ex1.h2], ex1.o2, PairStrategy.explicit([(1, 2)]))
    with pytest.raises(ScheduleError, match="not pending"):
        buchberger([ex1.h1, ex1.h2], ex1.o2, PairStrategy.explicit([(1, 3)]))
    ok = buchberger([ex1.h1, ex1.h2], ex1.o2, PairStrategy.explicit([(1, 2)], fallback=True))
    assert len(ok) == 3


@pytest.mark.parametrize("text", ["minlcm", "fifo", "random:17", "schedule:/1-3,1-2+minlcm",
                                  "schedule:1-2,2-3"])
def test_strategy_text_round_trip(text):
    assert str(parse_strategy(text)) == text


@pytest.mark.parametrize("text", ["greedy", "random:x", "schedule:1-1", "schedule:0-2"])
def test_bad_strategy_text(text):
    with pytest.raises(ValueError):
        parse_strategy(text)


def _random_system(seed):
    rng = random.Random(seed)
    R = random_ring(rng)
    o = random_order(rng, R)
    F = [f for f in (random_polynomial(rng, R) for _ in range(rng.randint(1, 4))) if f]
    return rng, R, o, F


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_buchberger_output_is_gb(seed):
    rng, R, o, F = _random_system(seed)
    if not F:
        return
    for strat in (PairStrategy.min_lcm(), PairStrategy.fifo(), PairStrategy.random(seed)):
        G = buchberger(F, o, strat)
        assert G[:len(F)] == F
        assert is_groebner_basis(G, o).is_gb
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                assert normal_form(s_polynomial(G[i], G[j], o), G, o).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_cofactor_rows(seed):
    rng, R, o, F = _random_system(seed)
    if not F:
        return
    res = extended_buchberger(F, o, PairStrategy.random(seed))
    for k, row in enumerate(res.rows):
        ref = res.basis[:res.n_inputs + k]
        assert len(row) == len(ref)
        assert dot(row, ref) == res.basis[res.n_inputs + k]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9))
def test_reduced_gb_matches_sympy(seed):
    rng, R, o, F = _random_system(seed)
    if not F:
        return
    assert set(reduced_groebner_basis(F, o)) == sympy_reduced_gb(F, o)
