from fractions import Fraction

import pytest

from steiner_szeged import closed_form as cf
from steiner_szeged.graph_core import (
    GraphError,
    complete,
    complete_multipartite,
    cycle,
    enumerate_trees,
    path,
    pendant_edge_count,
    star,
)
from steiner_szeged.steiner import build_table
from steiner_szeged.szeged import Quarter, classical_szeged, classify_edge, rsz_k, sz_k


def test_binom_boundaries():
    assert cf.binom(3, 2) == 3
    assert cf.binom(2, 3) == 0
    assert cf.binom(2, -1) == 0
    assert cf.binom(-1, 0) == 0


class TestTrees:
    def test_p4(self):
        assert cf.sz_tree_formula(path(4), 2) == 10 == classical_szeged(path(4))
        assert cf.sz_tree_formula(path(4), 3) == 5

    def test_star5(self):
        assert cf.sz_tree_formula(star(4), 2) == 16

    def test_rejects_non_tree(self):
        with pytest.raises(GraphError):
            cf.sz_tree_formula(cycle(4), 2)

    @pytest.mark.parametrize("n", range(3, 9))
    def test_matches_direct(self, n):
        for t in enumerate_trees(n):
            table = build_table(t, n - 1)
            for k in range(2, n):
                assert cf.sz_tree_formula(t, k) == sz_k(t, k, table)

    def test_split_sizes(self):
        assert cf.split_sizes(path(5), (1, 2)) == (2, 3)
        with pytest.raises(GraphError):
            cf.split_sizes(cycle(4), (0, 1))


class TestPaths:
    def test_values(self):
        assert cf.sz_path_formula(4, 3) == 5
        assert cf.sz_path_formula(5, 2) == 20
        assert cf.n0_path(4, 3, 2) == 1

    @pytest.mark.parametrize("n", range(3, 13))
    def test_matches_tree_formula(self, n):
        for k in range(2, n):
            assert cf.sz_path_formula(n, k) == cf.sz_tree_formula(path(n), k)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_n0_matches_classification(self, n):
        g = path(n)
        table = build_table(g, min(n - 1, 8))
        for k in range(2, n):
            for i in range(1, n):
                assert cf.n0_path(n, k, i) == classify_edge(table, g, (i - 1, i), k).n_0
            assert cf.rsz_path_formula(n, k) == rsz_k(g, k, table)

    def test_range(self):
        with pytest.raises(GraphError):
            cf.n0_path(4, 3, 4)


class TestStars:
    def test_values(self):
        assert cf.sz_star_formula(4, 3) == 16
        assert cf.sz_star_formula(4, 2) == 16 == classical_szeged(star(4))

    @pytest.mark.parametrize("leaves", range(2, 8))
    def test_matches_direct(self, leaves):
        g = star(leaves)
        for k in range(2, leaves + 1):
            assert cf.sz_star_formula(leaves, k) == sz_k(g, k)
            assert cf.rsz_star_formula(leaves, k) == rsz_k(g, k)


class TestComplete:
    def test_values(self):
        assert cf.sz_complete_formula(5, 3) == 10
        assert cf.rsz_complete_paper(5, 2) == 90
        assert cf.rsz_complete_corrected(5, 2) == Fraction(125, 2)
        assert rsz_k(complete(5), 2) == Fraction(125, 2)

    def test_coincidence_at_k4(self):
        assert cf.rsz_complete_corrected(4, 2) == 24 == cf.rsz_complete_paper(4, 2)
        assert rsz_k(complete(4), 2) == 24

    @pytest.mark.parametrize("n", range(3, 8))
    def test_corrected_matches_direct(self, n):
        for k in range(2, n):
            assert cf.rsz_complete_corrected(n, k) == rsz_k(complete(n), k)


class TestMultipartite:
    def test_values(self):
        assert cf.sz_multipartite_formula((2, 2), 2) == 16 == classical_szeged(cycle(4))
        assert cf.sz_multipartite_formula((2, 3), 2) == 36
        assert cf.n0_multipartite_corrected((2, 3), 0, 1, 2) == 0

    def test_hypothesis(self):
        with pytest.raises(GraphError):
            cf.sz_multipartite_formula((2, 3), 3)

    @pytest.mark.parametrize("parts", [(2, 2), (2, 3), (3, 3), (2, 2, 2), (3, 4), (2, 2, 3), (3, 3, 3)])
    def test_against_direct(self, parts):
        g = complete_multipartite(parts)
        starts = [sum(parts[:i]) for i in range(len(parts))]
        for k in range(2, min(parts) + 1):
            table = build_table(g, k)
            assert cf.sz_multipartite_formula(parts, k) == sz_k(g, k, table)
            assert cf.rsz_multipartite_corrected(parts, k) == rsz_k(g, k, table)
            for i in range(len(parts)):
                for j in range(i + 1, len(parts)):
                    c = classify_edge(table, g, (starts[i], starts[j]), k)
                    assert cf.n0_multipartite_corrected(parts, i, j, k) == c.n_0

    def test_paper_n0_undercounts(self):
        # K_{3,3}, k=3: oracle ties 4 of the C(4,2)=6 subsets; the published sum gives 2
        g = complete_multipartite((3, 3))
        c = classify_edge(build_table(g, 3), g, (0, 3), 3)
        assert c.n_0 == 4
        assert cf.n0_multipartite_paper((3, 3), 0, 1, 3) == 2


class TestPenultimate:
    def test_tree_values(self):
        assert cf.sz_penult_tree(4, 2) == 5
        assert cf.rsz_penult_tree(4, 2) == Fraction(25, 4)
        assert cf.sz_penult_tree(5, 4) == 8
        assert cf.rsz_penult_tree(5, 4) == 8
        assert cf.rsz_penult_tree(5, 2) == Fraction(17, 2)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_tree_formula_matches_direct(self, n):
        for t in enumerate_trees(n):
            p = pendant_edge_count(t)
            assert cf.sz_penult_tree(n, p) == sz_k(t, n - 1)
            assert cf.rsz_penult_tree(n, p) == rsz_k(t, n - 1)

    def test_graph_values(self):
        assert cf.sz_penult_graph_paper(3, 2) == 5
        assert cf.sz_penult_graph_paper(5, 0) == 5 == sz_k(cycle(5), 4)
        assert cf.rsz_penult_graph_paper(4, 1) == Fraction(35, 4)

    def test_ranges(self):
        with pytest.raises(GraphError):
            cf.sz_penult_tree(2, 1)
        with pytest.raises(GraphError):
            cf.sz_penult_graph_paper(3, 4)


class TestBounds:
    def test_values(self):
        assert cf.sz_bounds(5, 5, 3) == (5, 30)
        # C(2,2) = 1: (ceil(1/2) + 1)(floor(1/2) + 1) = 2
        assert cf.sz_bounds(4, 4, 3) == (4, 8)

    def test_range(self):
        with pytest.raises(GraphError):
            cf.sz_bounds(4, 4, 4)


def test_registry():
    r = cf.evaluate("ex3.1-rsz-corrected", 5, 2)
    assert r.value == Quarter(250) and r.status_note
    assert cf.evaluate("thm2.1", path(4), 3).value == 5
    assert cf.evaluate("thm4.2-sz-paper", 4, 1).status_note == cf.PENULT_GRAPH_NOTE
    with pytest.raises(GraphError):
        cf.evaluate("nope")
