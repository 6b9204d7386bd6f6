import itertools

import pytest
from hypothesis import given, settings

from steiner_szeged.graph_core import (
    CapError,
    complete,
    complete_multipartite,
    connected_graphs,
    cycle,
    path,
    paw,
    star,
)
from steiner_szeged.steiner import build_table
from steiner_szeged.symmetry import (
    Permutation,
    automorphisms,
    edge_orbits,
    orbit_classifications,
    rsz_k_via_orbits,
    sz_k_via_orbits,
)
from steiner_szeged.szeged import classify_all, rsz_k, sz_k

from .conftest import connected_graphs as graphs_st


@pytest.mark.parametrize("g, order", [(cycle(5), 10), (path(4), 2), (complete(4), 24), (paw(), 2), (star(4), 24)])
def test_group_orders(g, order):
    assert len(automorphisms(g)) == order


def brute_force_group(g):
    return {p for p in itertools.permutations(range(g.n)) if Permutation(p).is_automorphism_of(g)}


@pytest.mark.parametrize("n", range(2, 6))
def test_group_matches_brute_force(n):
    for g in connected_graphs(n):
        assert {p.image for p in automorphisms(g)} == brute_force_group(g)


@settings(max_examples=40, deadline=None)
@given(graphs_st(min_n=2, max_n=7))
def test_group_axioms(g):
    group = automorphisms(g)
    elements = {p.image for p in group}
    assert tuple(range(g.n)) == group[0].image
    for a in group:
        assert a.is_automorphism_of(g)
        assert a.inverse().image in elements
        for b in group[:10]:
            assert a.compose(b).image in elements


def test_cap():
    with pytest.raises(CapError):
        automorphisms(path(13))
    with pytest.raises(CapError):
        automorphisms(complete(7), max_group=100)


class TestOrbits:
    def test_star_edge_transitive(self):
        assert edge_orbits(star(4)).sizes == (4,)

    def test_paw(self):
        part = edge_orbits(paw())
        assert part.orbits == (((0, 1),), ((0, 2), (1, 2)), ((2, 3),))

    def test_p5(self):
        part = edge_orbits(path(5))
        assert part.orbits == (((0, 1), (3, 4)), ((1, 2), (2, 3)))
        assert part.representatives == ((0, 1), (1, 2))

    @settings(max_examples=50, deadline=None)
    @given(graphs_st(min_n=2, max_n=8))
    def test_partition(self, g):
        part = edge_orbits(g)
        flat = [e for o in part.orbits for e in o]
        assert sorted(flat) == list(g.edges) and len(flat) == len(set(flat))


class TestOrbitIndices:
    def test_c5(self):
        assert sz_k_via_orbits(cycle(5), 3) == 20 == sz_k(cycle(5), 3)
        (_, c), = orbit_classifications(cycle(5), 3)
        assert (c.n_u, c.n_v, c.n_0) == (1, 1, 1)

    def test_k5(self):
        assert len(edge_orbits(complete(5)).orbits) == 1
        assert sz_k_via_orbits(complete(5), 3) == 10

    def test_paw(self):
        terms = [(len(o), c.sz_term()) for o, c in orbit_classifications(paw(), 3)]
        assert terms == [(1, 1), (2, 2), (1, 2)]
        assert sz_k_via_orbits(paw(), 3) == 7

    @pytest.mark.parametrize("g", [complete_multipartite((2, 3)), complete_multipartite((2, 2, 2)), cycle(6), star(5)])
    def test_matches_direct(self, g):
        for k in range(2, g.n):
            assert sz_k_via_orbits(g, k) == sz_k(g, k)
            assert rsz_k_via_orbits(g, k) == rsz_k(g, k)


@pytest.mark.parametrize("n", range(3, 7))
def test_classification_constant_on_orbits(n):
    # unordered {n_u, n_v} and n_0 agree across each orbit, k in {2, 3}
    for g in connected_graphs(n):
        table = build_table(g, min(3, n - 1))
        part = edge_orbits(g)
        for k in range(2, min(3, n - 1) + 1):
            by_edge = {c.edge: c for c in classify_all(g, k, table)}
            for orbit in part.orbits:
                keys = {(tuple(sorted((by_edge[e].n_u, by_edge[e].n_v))), by_edge[e].n_0) for e in orbit}
                assert len(keys) == 1
