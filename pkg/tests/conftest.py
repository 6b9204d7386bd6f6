import itertools
import random

import pytest
from hypothesis import strategies as st

from steiner_szeged.graph_core import Graph, prufer_decode


@st.composite
def connected_graphs(draw, min_n=2, max_n=8):
    """A random spanning tree plus an arbitrary set of extra edges."""
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2)) if n > 2 else []
    tree = prufer_decode(seq, n) if n > 2 else Graph(n, ((0, 1),) if n == 2 else ())
    others = [e for e in itertools.combinations(range(n), 2) if e not in set(tree.edges)]
    extra = draw(st.lists(st.sampled_from(others), unique=True)) if others else []
    return Graph(n, tree.edges + tuple(extra))


@st.composite
def graph_and_permutation(draw, min_n=2, max_n=8):
    g = draw(connected_graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


@pytest.fixture(scope="session")
def random_graphs():
    """200 seeded random connected graphs with 3 <= n <= 10."""
    from steiner_szeged.graph_core import random_connected_graph

    rng = random.Random(20261014)
    return [random_connected_graph(rng.randint(3, 10), rng, p=rng.choice([0.1, 0.3, 0.6]))
            for _ in range(200)]
