from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclebounds.families import g_n, h_graph, hub, k1_plus_2kd, petersen
from cyclebounds.graph import complement, complete, empty_graph, from_edges
from cyclebounds.invariants import (
    Toughness,
    components,
    independence_number,
    invariant_record,
    is_t_tough,
    local_connectivity,
    min_degree,
    size,
    toughness,
    vertex_connectivity,
)

import oracles
from conftest import graphs


def test_basic_counts():
    p = petersen()
    assert (p.n, size(p), min_degree(p)) == (10, 15, 3)
    bowtie = k1_plus_2kd(2)
    assert (min_degree(bowtie), size(bowtie)) == (2, 6)
    assert components(empty_graph(5)) == 5


def test_min_degree_refuses_empty():
    with pytest.raises(ValueError):
        min_degree(empty_graph(0))


@pytest.mark.parametrize("n", range(1, 8))
def test_connectivity_of_cliques(n):
    assert vertex_connectivity(complete(n)) == n - 1


def test_connectivity_examples():
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(h_graph(1, 4, 5, 2)) == 2
    assert vertex_connectivity(hub(3, 5)) == 3
    assert vertex_connectivity(empty_graph(3)) == 0


def test_local_connectivity_rejects_adjacent():
    with pytest.raises(ValueError):
        local_connectivity(complete(3), 0, 1)


def test_alpha_examples():
    assert independence_number(complete(6)) == 1
    assert independence_number(empty_graph(7)) == 7
    assert independence_number(petersen()) == 4


def test_toughness_examples():
    assert toughness(complete(1)).infinite
    assert toughness(complete(5)).infinite
    assert toughness(petersen()).value == Fraction(4, 3)
    assert str(toughness(petersen())) == "4/3"
    assert toughness(empty_graph(3)).value == 0
    assert toughness(g_n(15, 5)).value == 1


def test_toughness_comparisons_are_exact():
    t = Toughness(Fraction(1, 3))
    assert t.at_least(Fraction(1, 3)) and not t.exceeds(Fraction(1, 3))
    inf = Toughness(None)
    assert inf.at_least(10**9) and inf.exceeds(10**9)


def test_oracles_on_all_small_graphs(small_graphs):
    for g in small_graphs:
        assert vertex_connectivity(g) == oracles.vertex_connectivity(g), g
        assert independence_number(g) == oracles.independence_number(g), g
        tau = toughness(g)
        assert tau.value == oracles.toughness(g), g


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_whitney_kappa_le_delta(g):
    assert vertex_connectivity(g) <= min_degree(g)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_alpha_is_clique_number_of_complement(g):
    assert independence_number(g) == oracles.clique_number(complement(g))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9), st.fractions(0, 3), st.fractions(0, 3))
def test_t_tough_monotone(g, a, b):
    lo, hi = min(a, b), max(a, b)
    if is_t_tough(g, hi):
        assert is_t_tough(g, lo)
    if toughness(g).exceeds(1):
        assert is_t_tough(g, 1)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=10))
def test_connectivity_matches_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    assert vertex_connectivity(g) == nx.node_connectivity(h)


def test_invariant_record_bounds(small_graphs):
    for g in small_graphs:
        r = invariant_record(g)
        assert r.delta <= r.n - 1 and r.alpha >= 1 and r.q <= r.n * (r.n - 1) // 2
        if r.n >= 2:
            assert r.kappa <= r.delta
        assert r.as_dict()["tau"] == str(r.tau)


def test_from_edges_disconnected_has_zero_toughness():
    g = from_edges(4, [(0, 1), (2, 3)])
    assert toughness(g).value == 0 and not is_t_tough(g, Fraction(1, 100))
