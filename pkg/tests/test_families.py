import pytest

from cyclebounds.cycles import circumference, is_hamiltonian
from cyclebounds.families import (
    FAMILIES,
    FamilySpec,
    build,
    g_n,
    g_star,
    h_graph,
    hub,
    k1_plus_2kd,
    l_graph,
    mka_plus_kb,
    petersen,
    t15_graph,
)
from cyclebounds.graph import canonical_form, complete
from cyclebounds.invariants import (
    independence_number,
    is_connected,
    min_degree,
    toughness,
    vertex_connectivity,
)


def test_mka_plus_kb_shape():
    g = mka_plus_kb(3, 2, 2)
    assert g.n == 8
    assert g.num_edges() == 3 * 1 + 1 + 6 * 2


@pytest.mark.parametrize("kappa,delta", [(k, d) for d in range(3, 7) for k in range(2, d)])
def test_hub_invariants(kappa, delta):
    g = hub(kappa, delta)
    assert min_degree(g) == delta
    assert vertex_connectivity(g) == kappa
    assert circumference(g)[0] == kappa * (delta - kappa + 2)


@pytest.mark.parametrize("delta", range(2, 6))
def test_bowtie_family(delta):
    g = k1_plus_2kd(delta)
    assert g.num_edges() == delta * delta + delta
    assert min_degree(g) == delta and not is_hamiltonian(g)


@pytest.mark.parametrize("kappa,delta", [(k, d) for d in range(2, 7) for k in range(2, d + 1)])
def test_h_graph_roles(kappa, delta):
    g = h_graph(1, delta - kappa + 1, delta, kappa)
    assert vertex_connectivity(g) == kappa
    assert min_degree(g) == delta
    assert independence_number(g) >= delta


def test_h_graph_example():
    g = h_graph(1, 4, 5, 2)
    assert (g.n, min_degree(g), vertex_connectivity(g)) == (14, 5, 2)
    assert not is_hamiltonian(g)


def test_l_graph():
    assert canonical_form(l_graph(1)) == canonical_form(complete(4))
    g = l_graph(3)
    assert (g.n, min_degree(g), vertex_connectivity(g)) == (10, 3, 2)
    assert toughness(g).value == 1
    assert circumference(g)[0] == 8


def test_g_families():
    g = g_n(15, 5)
    assert g.n == 15 and min_degree(g) == 5
    assert toughness(g).value == 1 and not is_hamiltonian(g)
    s = g_star(15)
    assert s.num_edges() == 56 and toughness(s).value == 1 and not is_hamiltonian(s)
    with pytest.raises(ValueError):
        g_n(14, 5)
    with pytest.raises(ValueError):
        g_n(15, 7)


def test_petersen_and_t15():
    p = petersen()
    assert p.degrees() == [3] * 10 and is_connected(p)
    t = t15_graph()
    assert (t.n, t.num_edges(), min_degree(t), vertex_connectivity(t)) == (8, 9, 2, 2)


def test_registry():
    assert set(FAMILIES) >= {"hub", "h", "l", "g_n", "g_star", "petersen", "t15"}
    assert build("hub", kappa=2, delta=4) == hub(2, 4)
    assert FamilySpec("hub", {"kappa": 2, "delta": 4}).label() == "hub(kappa=2, delta=4)"
    with pytest.raises(ValueError):
        build("nope")
    with pytest.raises(ValueError):
        build("hub", kappa=2)
    with pytest.raises(ValueError):
        hub(5, 4)
