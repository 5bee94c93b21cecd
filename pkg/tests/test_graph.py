import random

import pytest
from hypothesis import given, settings

from cyclebounds.graph import (
    Graph,
    Graph6Error,
    canonical_form,
    complement,
    complete,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    induced_subgraph,
    join,
    parse_graph6,
    path_graph,
    relabel,
    write_graph6,
)
from cyclebounds.harness import enumerate_graphs

from conftest import graphs


def test_constructors():
    assert complete(4).num_edges() == 6
    assert empty_graph(5).num_edges() == 0
    assert cycle_graph(5).degrees() == [2] * 5
    assert path_graph(1).num_edges() == 0
    assert complement(complete(4)) == empty_graph(4)
    assert from_edges(3, [(0, 1), (1, 0), (0, 1)]).num_edges() == 1


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_from_edges_rejects(edges):
    with pytest.raises(ValueError):
        from_edges(3, edges)


def test_cycle_graph_needs_three():
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_join_and_union_sizes():
    g, h = cycle_graph(4), path_graph(3)
    assert join(g, h).num_edges() == 4 + 2 + 12
    assert disjoint_union(g, h, complete(2)).n == 9
    assert disjoint_union().n == 0
    assert join(empty_graph(0), complete(3)) == complete(3)


def test_induced_subgraph_labels():
    g = cycle_graph(6)
    h, labels = induced_subgraph(g, [1, 2, 3, 5])
    assert labels == [1, 2, 3, 5]
    assert h.edges() == [(0, 1), (1, 2)]


def test_validate_catches_asymmetry():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0)).validate()


# graph6


@pytest.mark.parametrize("text,n,q", [("@", 1, 0), ("A_", 2, 1), ("Bw", 3, 3), ("?", 0, 0)])
def test_graph6_known(text, n, q):
    g = parse_graph6(text)
    assert (g.n, g.num_edges()) == (n, q)
    assert write_graph6(g) == text


def test_graph6_complete_three_is_bw():
    assert write_graph6(complete(3)) == "Bw"
    assert write_graph6(complete(1)) == "@"


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<Bw\n") == complete(3)


def test_graph6_long_header_round_trip():
    g = path_graph(70)
    text = write_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g


@pytest.mark.parametrize("text,offset", [
    ("B!", 1),        # byte out of range
    ("Bw?", 2),       # trailing byte
    ("C", 1),         # truncated body
    ("~??", 3),       # truncated 4-byte header
    ("~??B", 0),      # 4-byte header for n <= 62
    ("", 0),
])
def test_graph6_errors_have_offsets(text, offset):
    with pytest.raises(Graph6Error) as info:
        parse_graph6(text)
    assert info.value.offset == offset


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(write_graph6(g)) == g


def test_round_trip_every_graph_up_to_7():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            assert parse_graph6(write_graph6(g)) == g


# canonical form


def test_canonical_invariant_under_relabeling():
    rng = random.Random(20240501)
    for _ in range(1000):
        n = rng.randint(1, 9)
        g = from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.45])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_distinguishes_order_four():
    import itertools

    keys = set()
    pairs = list(itertools.combinations(range(4), 2))
    for bits in range(1 << len(pairs)):
        keys.add(canonical_form(from_edges(4, [p for i, p in enumerate(pairs) if bits >> i & 1])))
    assert len(keys) == 11


def test_canonical_is_a_graph_of_the_class():
    g = cycle_graph(7)
    h = parse_graph6(canonical_form(g))
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert canonical_form(h) == canonical_form(g)


def test_canonical_separates_cospectral_pair():
    # C_4 + K_1 and the star K_{1,4} share a spectrum but are not isomorphic
    a = disjoint_union(cycle_graph(4), complete(1))
    b = from_edges(5, [(0, i) for i in range(1, 5)])
    assert canonical_form(a) != canonical_form(b)


def test_canonical_refuses_large():
    with pytest.raises(ValueError):
        canonical_form(path_graph(11))
