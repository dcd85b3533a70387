import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import digraphs, random_digraph
from p2turan.constructions import build_d1, build_d2, build_d3
from p2turan.digraph import Digraph, VertexSet
from p2turan.freeness import (
    FreenessParams,
    PairCounts,
    check_neighbor_bound,
    check_successor_bound,
    find_violation_naive,
    find_witness,
    is_free,
    is_free_naive,
    max_path2,
    path2_count,
    path2_table_naive,
)


def test_path2_count(three_cycle):
    assert path2_count(Digraph.complete(4), 0, 1) == 2
    assert path2_count(three_cycle, 0, 2) == 1
    embedded = Digraph.from_arcs(3, [(0, 1), (1, 0)])
    assert path2_count(embedded, 0, 1) == 0


def test_path2_count_rejects_equal_endpoints():
    with pytest.raises(ValueError):
        path2_count(Digraph.complete(3), 1, 1)


def test_two_cycle_is_not_a_path():
    # u -> w -> u must not count as a 2-path from u to u
    d = Digraph.from_arcs(3, [(0, 1), (1, 0), (0, 2), (2, 0)])
    assert is_free(d, 1)
    # only the genuine paths 1->0->2 and 2->0->1 remain
    assert max_path2(d) == (1, 1, 2)


def test_max_path2():
    assert max_path2(Digraph.complete(5)) == (3, 0, 1)
    assert max_path2(Digraph.empty(4)) == (0, 0, 1)
    assert max_path2(build_d1(10, 2)[0])[0] == 2
    with pytest.raises(ValueError):
        max_path2(Digraph.empty(1))


def test_is_free():
    assert is_free(Digraph.complete(4), 2)
    assert not is_free(Digraph.complete(5), FreenessParams(2))
    d2 = build_d2(13, 3)[0]
    assert is_free(d2, 3) and is_free_naive(d2, 3)


def test_params_validation():
    with pytest.raises(ValueError):
        FreenessParams(0)


def test_find_witness():
    w = find_witness(Digraph.complete(5), 2)
    assert (w.source, w.target, w.midpoints.to_list(), w.threshold) == (0, 1, [2, 3, 4], 2)
    assert json.loads(w.to_json()) == {"source": 0, "target": 1, "midpoints": [2, 3, 4], "t": 2}
    d1 = build_d1(10, 2)[0]
    assert find_witness(d1, 2) is None
    w = find_witness(d1, 1)
    assert w is not None and len(w.midpoints) >= 2 and w.validate(d1)


def test_naive_agrees_on_small_cases():
    assert not is_free_naive(Digraph.complete(5), 2)
    for t in range(1, 6):
        assert is_free_naive(Digraph.empty(6), t)


def test_neighbor_bound():
    d, spec = build_d1(10, 2)
    u2 = VertexSet.of(10, spec.members(1))
    for u in spec.members(0):
        assert check_neighbor_bound(d, 2, u, u2)
    assert not check_neighbor_bound(Digraph.complete(5), 2, 0, VertexSet.of(5, [1]))
    with pytest.raises(ValueError):
        check_neighbor_bound(d, 2, 0, VertexSet.of(10, [0, 1]))


@given(digraphs(min_order=2), st.integers(1, 4), st.data())
def test_singleton_neighbor_bound_is_path_count(d, t, data):
    u = data.draw(st.integers(0, d.order - 1))
    s = data.draw(st.integers(0, d.order - 1).filter(lambda x: x != u))
    assert check_neighbor_bound(d, t, u, VertexSet.of(d.order, [s])) == (path2_count(d, u, s) <= t)


def test_successor_bound():
    d1 = build_d1(10, 2)[0]
    d3 = build_d3(14, 3)[0]
    assert all(check_successor_bound(d1, 2, v) for v in range(10))
    assert all(check_successor_bound(d3, 3, v) for v in range(14))
    assert all(check_successor_bound(Digraph.empty(5), 2, v) for v in range(5))


@settings(max_examples=300)
@given(digraphs(max_order=9), st.integers(1, 5))
def test_oracle_equivalence(d, t):
    fast = is_free(d, t)
    assert fast == is_free_naive(d, t)
    if not fast:
        w = find_witness(d, t)
        u, v = find_violation_naive(d, t)
        assert (w.source, w.target) == (u, v)
        assert path2_table_naive(d)[u][v] > t


@given(digraphs(min_order=2))
def test_path_count_identity(d):
    for u in range(d.order):
        for w in range(d.order):
            if u != w:
                assert path2_count(d, u, w) == d.arc_count(d.out_neighbors(u), VertexSet.of(d.order, [w]))


@given(digraphs(), st.integers(1, 4), st.data())
def test_monotone_under_deletion(d, t, data):
    arcs = list(d.arcs())
    if is_free(d, t) and arcs:
        drop = data.draw(st.sets(st.sampled_from(arcs)))
        smaller = d
        for u, v in drop:
            smaller = smaller.remove_arc(u, v)
        assert is_free(smaller, t)


@given(digraphs(), st.integers(1, 4))
def test_monotone_in_t(d, t):
    if is_free(d, t):
        assert is_free(d, t + 1)


@given(st.integers(1, 6), st.integers(0, 6))
def test_small_orders_always_free(t, extra):
    n = min(t + 2, extra + 1)
    assert is_free(Digraph.complete(n), t)


@given(digraphs(min_order=2), st.integers(1, 3))
def test_lemmas_hold_on_free_digraphs(d, t):
    if not is_free(d, t):
        return
    rng = random.Random(str(d.rows))
    for v in range(d.order):
        assert check_successor_bound(d, t, v)
        others = [x for x in range(d.order) if x != v]
        S = VertexSet.of(d.order, rng.sample(others, rng.randint(1, len(others))))
        assert check_neighbor_bound(d, t, v, S)


def test_incremental_counts_match_recompute():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 9)
        pc = PairCounts(n)
        present = set()
        for _ in range(60):
            u, v = rng.sample(range(n), 2)
            if (u, v) in present:
                pc.remove(u, v)
                present.discard((u, v))
            else:
                pc.add(u, v)
                present.add((u, v))
            d = pc.to_digraph()
            table = path2_table_naive(d)
            assert all(pc.get(a, b) == table[a][b] for a in range(n) for b in range(n) if a != b)
            assert pc.arcs == d.size() == len(present)


def test_blocked_predicts_violation():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(3, 7)
        t = rng.randint(1, 3)
        d = random_digraph(rng, n)
        if not is_free(d, t):
            continue
        pc = PairCounts.from_digraph(d)
        for u in range(n):
            for v in range(n):
                if u != v and not d.has_arc(u, v):
                    assert pc.blocked(u, v, t) == (not is_free(d.add_arc(u, v), t))
