import pytest
from hypothesis import given, strategies as st

from conftest import digraphs
from p2turan.digraph import Digraph, VertexSet


def test_add_arc():
    d = Digraph.empty(2).add_arc(0, 1)
    assert d.size() == 1
    assert d.add_arc(0, 1).size() == 1


@pytest.mark.parametrize("u,v", [(0, 0), (0, 2), (-1, 1)])
def test_add_arc_rejects(u, v):
    with pytest.raises(ValueError):
        Digraph.empty(2).add_arc(u, v)


def test_loops_rejected_at_construction():
    with pytest.raises(ValueError):
        Digraph(2, (0b01, 0))
    with pytest.raises(ValueError):
        Digraph(0, ())


def test_arc_count():
    k3 = Digraph.complete(3)
    assert k3.arc_count(VertexSet.of(3, [0]), VertexSet.of(3, [1, 2])) == 2
    assert k3.arc_count(VertexSet.of(3), k3.vertices) == 0
    e4 = Digraph.empty(4)
    assert e4.arc_count(e4.vertices, e4.vertices) == 0
    with pytest.raises(ValueError):
        k3.arc_count(VertexSet.of(4, [0]), k3.vertices)


def test_neighborhoods(two_cycle):
    assert two_cycle.out_neighbors(0).to_list() == [1]
    assert Digraph.complete(4).out_degree(0) == 3
    assert Digraph.empty(3).in_degree(2) == 0
    with pytest.raises(ValueError):
        Digraph.empty(3).out_neighbors(3)


def test_tau(two_cycle, three_cycle):
    assert two_cycle.tau(0) == 1
    assert three_cycle.tau(0) == 0
    assert Digraph.complete(4).tau(1) == 3


def test_alpha():
    assert Digraph.complete(4).alpha(0) == 1
    assert Digraph.empty(3).alpha(0) == 0
    star = Digraph.from_arcs(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    # V \ N+(1) = {0, 1, 3}; vertex 0 sends 0->1 and 0->3 into it, nobody sends more
    assert star.alpha(1) == 2
    assert star.alpha(0) == 0


def test_max_degree():
    assert Digraph.complete(5).max_degree() == (4, "out")
    assert Digraph.from_arcs(3, [(0, 1)]).max_degree() == (1, "out")
    assert Digraph.from_arcs(3, [(1, 0), (2, 0)]).max_degree() == (2, "in")


def test_induced_subgraph(three_cycle, two_cycle):
    sub, keep = Digraph.complete(4).induced_subgraph(VertexSet.of(4, [0, 1]))
    assert sub == two_cycle and keep == [0, 1]
    sub, _ = three_cycle.induced_subgraph(VertexSet.of(3, [0, 1]))
    assert sorted(sub.arcs()) == [(0, 1)]
    with pytest.raises(ValueError):
        three_cycle.induced_subgraph(VertexSet.of(3))


def test_vertex_set_bounds():
    with pytest.raises(ValueError):
        VertexSet(0b1000, 3)


@given(digraphs())
def test_degree_sums(d):
    outs = [d.out_degree(u) for u in range(d.order)]
    ins = [d.in_degree(u) for u in range(d.order)]
    assert all(o == len(d.out_neighbors(u)) for u, o in enumerate(outs))
    assert sum(outs) == sum(ins) == d.size() == d.arc_count(d.vertices, d.vertices)


@given(digraphs(), st.data())
def test_arc_count_splits(d, data):
    S = VertexSet(data.draw(st.integers(0, (1 << d.order) - 1)), d.order)
    T = VertexSet(data.draw(st.integers(0, (1 << d.order) - 1)), d.order)
    assert d.arc_count(S, T) + d.arc_count(S, T.complement()) == sum(d.out_degree(u) for u in S)


@given(digraphs())
def test_tau_bounded(d):
    for u in range(d.order):
        assert d.tau(u) <= min(d.out_degree(u), d.in_degree(u))


@given(digraphs())
def test_induced_on_all_is_identity(d):
    sub, keep = d.induced_subgraph(d.vertices)
    assert sub == d and keep == list(range(d.order))


@given(digraphs(min_order=2), st.data())
def test_add_remove_roundtrip(d, data):
    u = data.draw(st.integers(0, d.order - 1))
    v = data.draw(st.integers(0, d.order - 1).filter(lambda x: x != u))
    if not d.has_arc(u, v):
        assert d.add_arc(u, v).remove_arc(u, v) == d
