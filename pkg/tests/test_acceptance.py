"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import contextlib
import io
import subprocess
import sys
import time
from fractions import Fraction
from math import comb

import pytest

from steiner_szeged import closed_form as cf
from steiner_szeged.cli import main
from steiner_szeged.graph_core import (
    complete,
    complete_multipartite,
    connected_graphs,
    cycle,
    enumerate_trees,
    path,
    paw,
    pendant_edge_count,
    star,
)
from steiner_szeged.steiner import build_table, steiner_distance, steiner_distance_oracle, vertices_of
from steiner_szeged.symmetry import rsz_k_via_orbits, sz_k_via_orbits
from steiner_szeged.szeged import (
    classical_revised_szeged,
    classical_szeged,
    classify_all,
    rsz_k,
    sz_k,
)
from steiner_szeged.verify import conjecture_scan, remark1_extremality, verify_claim, verify_instance

pytestmark = pytest.mark.slow


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number, title):
        start = time.perf_counter()
        try:
            yield
        except BaseException as exc:
            with capsys.disabled():
                print(f"\n[FAIL] criterion {number:2d}: {title} ({type(exc).__name__}: {exc})")
            raise
        with capsys.disabled():
            print(f"\n[PASS] criterion {number:2d}: {title} ({time.perf_counter() - start:.1f}s)")

    return run


def corpus(max_n=7, min_n=2):
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def test_c01_oracle_agreement(criterion):
    with criterion(1, "Steiner DP equals brute-force oracle on every subset, connected n<=7"):
        start = time.perf_counter()
        graphs = subsets = 0
        for g in corpus(7, 1):
            graphs += 1
            for m in range(1, 1 << g.n):
                s = vertices_of(m)
                assert steiner_distance(g, s) == steiner_distance_oracle(g, s), (g, s)
                subsets += 1
        assert graphs == 996
        assert time.perf_counter() - start < 300


def test_c02_partition_identity(criterion):
    with criterion(2, "n_u + n_v + n_0 = C(n-2, k-1) on the corpus"):
        for g in corpus(7, 3):
            table = build_table(g, g.n - 1)
            for k in range(2, g.n):
                for c in classify_all(g, k, table):
                    assert c.n_u + c.n_v + c.n_0 == comb(g.n - 2, k - 1)


def test_c03_k2_reduction(criterion):
    with criterion(3, "k=2 indices equal the classical Szeged and revised Szeged"):
        for g in corpus(7, 3):
            table = build_table(g, 2)
            assert sz_k(g, 2, table) == classical_szeged(g)
            assert rsz_k(g, 2, table) == classical_revised_szeged(g)


def test_c04_tree_formula(criterion):
    with criterion(4, "tree closed form equals direct Sz_k, trees n<=9, all k"):
        start = time.perf_counter()
        count = 0
        for n in range(3, 10):
            for t in enumerate_trees(n):
                table = build_table(t, n - 1)
                for k in range(2, n):
                    assert cf.sz_tree_formula(t, k) == sz_k(t, k, table)
                count += 1
        assert count == sum((1, 2, 3, 6, 11, 23, 47))
        assert time.perf_counter() - start < 120


def test_c05_penultimate_trees(criterion):
    with criterion(5, "Sz_{n-1}(T) = n+p-1 and rSz_{n-1}(T) = 2p + 9(n-p-1)/4, trees n<=9"):
        for n in range(3, 10):
            for t in enumerate_trees(n):
                p = pendant_edge_count(t)
                table = build_table(t, n - 1)
                assert sz_k(t, n - 1, table) == n + p - 1
                assert rsz_k(t, n - 1, table) == 2 * p + Fraction(9, 4) * (n - p - 1)


def test_c06_orbit_method(criterion):
    families = [complete_multipartite((2, 3)), complete_multipartite((2, 2, 2))]
    for n in range(3, 9):
        families += [path(n), cycle(n), star(n - 1), complete(n)]
    with criterion(6, "orbit method equals direct method, corpus n<=7 plus families"):
        for g in list(corpus(7, 3)) + families:
            table = build_table(g, g.n - 1)
            for k in range(2, g.n):
                assert sz_k_via_orbits(g, k, table) == sz_k(g, k, table)
                assert rsz_k_via_orbits(g, k, table) == rsz_k(g, k, table)


def test_c07_multipartite_product(criterion):
    with criterion(7, "multipartite Sz_k formula, K_{2,2} K_{2,3} K_{3,3} K_{2,2,2}"):
        for parts in [(2, 2), (2, 3), (3, 3), (2, 2, 2)]:
            g = complete_multipartite(parts)
            for k in range(2, min(parts) + 1):
                assert cf.sz_multipartite_formula(parts, k) == sz_k(g, k)


def test_c08_bounds(criterion):
    with criterion(8, "m <= Sz_k <= m(ceil(C/2)+1)(floor(C/2)+1) on the corpus"):
        for g in corpus(7, 3):
            table = build_table(g, g.n - 1)
            for k in range(2, g.n):
                lo, hi = cf.sz_bounds(g.n, g.m, k)
                assert lo == g.m
                assert lo <= sz_k(g, k, table) <= hi


def test_c09_complete_graphs(criterion):
    with criterion(9, "Sz_k(K_n) = n(n-1)/2 for 3<=n<=8, all k"):
        for n in range(3, 9):
            for k in range(2, n):
                assert sz_k(complete(n), k) == n * (n - 1) // 2 == cf.sz_complete_formula(n, k)


def test_c10_erratum_findings(criterion):
    with criterion(10, "suspect formulas compared against the oracle"):
        sz, rsz = verify_instance("thm4.2", paw(), name="paw")
        assert sz.quantity == "sz" and (sz.expected, sz.actual) == (5, 7)
        assert sz.status == "counterexample"
        assert sz.expected == cf.sz_penult_graph_paper(4, 1)
        assert sz.actual == sz_k(paw(), 3)

        (f,) = verify_instance("thm5.1-1", cycle(5), k=3, name="cycle(5)")
        assert (f.expected, f.actual, f.status) == (5, 20, "counterexample")
        assert f.actual == sz_k(cycle(5), 3)

        f = next(f for f in verify_claim("ex3.1-rsz", max_n=5, k=2) if f.instance["n"] == 5)
        assert (f.expected, f.actual, f.status) == (90, Fraction(125, 2), "counterexample")
        assert f.expected == cf.rsz_complete_paper(5, 2)
        assert f.actual == rsz_k(complete(5), 2)

        (f,) = [f for f in verify_claim("thm3.3-n0", max_n=5, k=2)
                if f.instance["graph"] == "complete_multipartite(2,3)"]
        assert f.expected == cf.n0_multipartite_paper((2, 3), 0, 1, 2)
        assert (f.expected, f.actual, f.status) == (0, 0, "confirmed")

        # the same comparisons through the command line
        out = io.StringIO()
        assert main(["verify", "--claim", "thm4.2", "--family", "paw"], out=out) == 0
        assert '"expected": 5' in out.getvalue() and '"actual": 7' in out.getvalue()


def test_c11_remark1(criterion):
    with criterion(11, "star minimizes and path maximizes rSz_{n-1} over trees, 4<=n<=9"):
        for n in range(4, 10):
            f = remark1_extremality(n)
            assert f.status in ("confirmed", "counterexample")
            assert f.status == "confirmed", f.to_record()


def test_c12_conjecture_scan(criterion):
    with criterion(12, "conjecture_scan(8, k), k in {3, 4}, under 10 minutes and deterministic"):
        start = time.perf_counter()
        for k in (3, 4):
            first = conjecture_scan(8, k).to_record()
            assert first == conjecture_scan(8, k).to_record()
            assert first["pairs_checked"] > 0
        assert time.perf_counter() - start < 600


def test_c13_cli_determinism(criterion):
    cmd = [sys.executable, "-m", "steiner_szeged", "verify", "--claim", "thm5.1-2", "--max-n", "7", "--k", "3"]
    with criterion(13, "two identical CLI invocations give byte-identical output"):
        a = subprocess.run(cmd, capture_output=True, check=True)
        b = subprocess.run(cmd, capture_output=True, check=True)
        assert a.stdout and a.stdout == b.stdout
