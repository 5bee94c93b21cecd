import itertools

import pytest
from hypothesis import strategies as st

from cyclebounds.graph import from_edges
from cyclebounds.harness import enumerate_graphs


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edges(n, chosen)


@pytest.fixture(scope="session")
def small_graphs():
    """Every graph with 1 <= n <= 6, one per isomorphism class."""
    return [g for n in range(1, 7) for g in enumerate_graphs(n)]
