"""Check each published claim against independently computed index values.

Every ``actual`` value comes from the edge classification over a Steiner
table whose entries were each confirmed by the brute-force oracle; the
``expected`` value comes from the formula under test. Status is exact
comparison (interval membership for the bounds claim).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Callable, Iterator

from . import closed_form as cf
from .graph_core import (
    CapError,
    Edge,
    Graph,
    GraphError,
    complete,
    complete_multipartite,
    component_mask,
    connected_graphs,
    cycle,
    emit_graph6,
    enumerate_trees,
    path,
    pendant_edge_count,
    random_connected_graph,
    star,
    vertex_connectivity,
)
from .steiner import SteinerTable, all_pairs_distances, popcount, steiner_distance_oracle, steiner_dp
from .szeged import EdgeClassification, Quarter, classical_szeged, classify_edge, subset_sides
from .symmetry import OrbitPartition, edge_orbits

SOUND_CLAIMS = (
    "thm2.1", "ex2.1", "ex2.2", "thm3.1", "cor3.2", "ex3.1-sz", "ex3.2",
    "thm3.3-sz", "thm4.1", "thm5.1-2", "remark1",
)
SUSPECT_CLAIMS = ("thm4.2", "thm5.1-1", "ex3.1-rsz", "thm3.3-n0")
OPEN_CLAIMS = ("conjecture",)
CLAIMS = SOUND_CLAIMS + SUSPECT_CLAIMS + OPEN_CLAIMS

MAX_N = 10
EXHAUSTIVE_MAX_N = 7
EXTREMAL_MAX_N = 9
RANDOM_PER_ORDER = 10


class InconsistencyError(AssertionError):
    """The DP and the brute-force oracle disagree: a library bug, not a finding."""


def _plain(value):
    if isinstance(value, Quarter):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


@dataclass(frozen=True)
class Finding:
    claim_id: str
    instance: dict
    quantity: str
    expected: object
    actual: object
    status: str
    witness: dict | None = None
    note: str | None = None
    alternate: dict | None = None

    def to_record(self) -> dict:
        rec = {
            "claim": self.claim_id,
            "instance": self.instance,
            "quantity": self.quantity,
            "expected": _plain(self.expected),
            "actual": _plain(self.actual),
            "status": self.status,
            "witness": _plain(self.witness),
        }
        if self.note is not None:
            rec["note"] = self.note
        if self.alternate is not None:
            rec["alternate"] = _plain(self.alternate)
        return rec


@dataclass
class ConjectureReport:
    n_max: int
    k: int
    pairs_checked: int = 0
    violations: list[tuple[str, str, int]] = field(default_factory=list)
    tie_pairs: int = 0

    def to_record(self) -> dict:
        return {
            "report": "conjecture",
            "n_max": self.n_max,
            "k": self.k,
            "pairs_checked": self.pairs_checked,
            "violations": [list(v) for v in self.violations],
            "violation_count": len(self.violations),
            "tie_pairs": self.tie_pairs,
        }


# ---------------------------------------------------------------------------
# oracle-checked instances


class Instance:
    """A graph with a lazily built, oracle-checked Steiner table."""

    def __init__(self, g: Graph, name: str | None = None):
        self.g = g
        self.name = name or emit_graph6(g)
        self._classes: dict[int, list[EdgeClassification]] = {}

    def describe(self, k: int | None = None) -> dict:
        d = {"graph": self.name, "n": self.g.n, "m": self.g.m}
        if k is not None:
            d["k"] = k
        return d

    @cached_property
    def table(self) -> SteinerTable:
        g = self.g
        apsp = all_pairs_distances(g)
        dist = steiner_dp(g, g.n - 1, apsp)
        for mask in range(1, 1 << g.n):
            if 2 <= popcount(mask) <= g.n - 1:
                if int(dist[mask]) != steiner_distance_oracle(g, mask):
                    raise InconsistencyError(f"{self.name}: DP and oracle differ on mask {mask:#x}")
        return SteinerTable(g, g.n - 1, dist, apsp)

    @cached_property
    def orbits(self) -> OrbitPartition:
        return edge_orbits(self.g)

    @cached_property
    def pendant(self) -> int:
        return pendant_edge_count(self.g)

    @cached_property
    def kappa(self) -> int:
        return vertex_connectivity(self.g)

    def ks(self, k: int | None) -> list[int]:
        valid = range(2, self.g.n)
        return list(valid) if k is None else ([k] if k in valid else [])

    def classes(self, k: int) -> list[EdgeClassification]:
        if k not in self._classes:
            t = self.table
            out = [classify_edge(t, self.g, e, k) for e in self.g.edges]
            total = comb(self.g.n - 2, k - 1)
            for c in out:
                if c.n_u + c.n_v + c.n_0 != total:
                    raise InconsistencyError(f"partition identity fails on {c}")
            self._classes[k] = out
        return self._classes[k]

    def classification(self, e: Edge, k: int) -> EdgeClassification:
        return self.classes(k)[self.g.edges.index(e)]

    def sz(self, k: int) -> int:
        return sum(c.sz_term() for c in self.classes(k))

    def rsz(self, k: int) -> Quarter:
        return sum((c.rsz_term() for c in self.classes(k)), Quarter(0))

    def sz_orbits(self, k: int) -> int:
        return sum(len(o) * self.classification(o[0], k).sz_term() for o in self.orbits.orbits)

    def rsz_orbits(self, k: int) -> Quarter:
        return sum(
            (self.classification(o[0], k).rsz_term() * len(o) for o in self.orbits.orbits),
            Quarter(0),
        )


SidePredictor = Callable[[Edge, tuple], int]


def _witness(inst: Instance, k: int, predict: SidePredictor | None) -> dict:
    """First edge (and subset) where the claim's per-subset prediction fails.

    Without a usable prediction, the first edge and its classification.
    """
    t = inst.table
    if predict is not None:
        for e in inst.g.edges:
            for sub, side in subset_sides(t, e, k):
                want = predict(e, sub)
                if want != side:
                    c = inst.classification(e, k)
                    return {
                        "edge": list(e),
                        "subset": list(sub),
                        "predicted_side": want,
                        "actual_side": side,
                        "classification": [c.n_u, c.n_v, c.n_0],
                    }
    e = inst.g.edges[0]
    c = inst.classification(e, k)
    return {"edge": list(e), "subset": None, "classification": [c.n_u, c.n_v, c.n_0]}


def _finding(claim: str, inst: Instance, k: int | None, quantity: str, expected, actual,
             predict: SidePredictor | None = None, ok: bool | None = None, **extra) -> Finding:
    if ok is None:
        ok = expected == actual
    witness = None
    if not ok:
        witness = _witness(inst, k, predict) if k is not None else {"graph": inst.name}
    return Finding(claim, inst.describe(k), quantity, expected, actual,
                   "confirmed" if ok else "counterexample", witness, **extra)


# -- side predictors ----------------------------------------------------------


def _all_ties(e: Edge, sub: tuple) -> int:
    return 0


def _tree_predictor(t: Graph) -> SidePredictor:
    side_u = {}
    for e in t.edges:
        cut = Graph(t.n, tuple(f for f in t.edges if f != e))
        side_u[e] = component_mask(cut, e[0])

    def predict(e: Edge, sub: tuple) -> int:
        inside_u = sum(1 for w in sub if side_u[e] >> w & 1)
        if inside_u == len(sub):
            return -1
        if inside_u == 0:
            return 1
        return 0
    return predict


def _pendant_predictor(g: Graph) -> SidePredictor:
    deg = g.degrees()

    def predict(e: Edge, sub: tuple) -> int:
        u, v = e
        if deg[u] == 1:
            return 1
        if deg[v] == 1:
            return -1
        return 0
    return predict


def _multipartite_predictor(parts: tuple[int, ...]) -> SidePredictor:
    owner = [i for i, a in enumerate(parts) for _ in range(a)]

    def predict(e: Edge, sub: tuple) -> int:
        u, v = e
        if all(owner[w] == owner[u] for w in sub):
            return 1
        if all(owner[w] == owner[v] for w in sub):
            return -1
        return 0
    return predict


# ---------------------------------------------------------------------------
# corpora


def _check_max_n(max_n: int, cap: int = MAX_N) -> None:
    if max_n > cap:
        raise CapError(f"max_n={max_n} exceeds the desk-scale cap {cap}")


def connected_corpus(max_n: int, seed: int = 0) -> Iterator[Instance]:
    """Exhaustive connected graphs for ``3 <= n <= min(max_n, 7)``, then seeded random ones up to ``max_n``."""
    _check_max_n(max_n)
    for n in range(3, min(max_n, EXHAUSTIVE_MAX_N) + 1):
        for g in connected_graphs(n):
            yield Instance(g)
    rng = random.Random(seed)
    for n in range(EXHAUSTIVE_MAX_N + 1, max_n + 1):
        for _ in range(RANDOM_PER_ORDER):
            yield Instance(random_connected_graph(n, rng))


def tree_corpus(max_n: int, min_n: int = 3) -> Iterator[Instance]:
    _check_max_n(max_n)
    for n in range(max(min_n, 2), max_n + 1):
        for t in enumerate_trees(n):
            yield Instance(t)


def family_corpus(max_n: int) -> Iterator[Instance]:
    _check_max_n(max_n)
    for n in range(3, max_n + 1):
        yield Instance(path(n), f"path({n})")
        yield Instance(cycle(n), f"cycle({n})")
        yield Instance(star(n - 1), f"star({n - 1})")
        yield Instance(complete(n), f"complete({n})")
    for parts in ((2, 3), (2, 2, 2)):
        if sum(parts) <= max_n:
            yield Instance(complete_multipartite(parts), _mp_name(parts))


def _mp_name(parts) -> str:
    return "complete_multipartite(" + ",".join(map(str, parts)) + ")"


def multipartite_instances(max_n: int) -> list[tuple[int, ...]]:
    """Non-decreasing part tuples with every part >= 2, at least two parts, total <= ``max_n``."""
    out = []

    def grow(prefix: tuple[int, ...], total: int):
        if len(prefix) >= 2:
            out.append(prefix)
        lo = prefix[-1] if prefix else 2
        for a in range(lo, max_n - total + 1):
            grow(prefix + (a,), total + a)

    grow((), 0)
    return sorted(out, key=lambda p: (sum(p), p))


# ---------------------------------------------------------------------------
# claims


def _thm2_1(max_n, k, seed):
    for inst in tree_corpus(max_n):
        for kk in inst.ks(k):
            yield _finding("thm2.1", inst, kk, "sz", cf.sz_tree_formula(inst.g, kk), inst.sz(kk),
                           _tree_predictor(inst.g))


def _ex2_1(max_n, k, seed):
    _check_max_n(max_n)
    for n in range(3, max_n + 1):
        inst = Instance(path(n), f"path({n})")
        pred = _tree_predictor(inst.g)
        for kk in inst.ks(k):
            yield _finding("ex2.1", inst, kk, "sz", cf.sz_path_formula(n, kk), inst.sz(kk), pred)
            expected_n0 = [cf.n0_path(n, kk, i) for i in range(1, n)]
            actual_n0 = [inst.classification((i - 1, i), kk).n_0 for i in range(1, n)]
            yield _finding("ex2.1", inst, kk, "n0-per-edge", expected_n0, actual_n0, pred)
            yield _finding("ex2.1", inst, kk, "rsz", cf.rsz_path_formula(n, kk), inst.rsz(kk), pred)


def _stars(max_n):
    _check_max_n(max_n)
    for leaves in range(2, max_n):
        yield leaves, Instance(star(leaves), f"star({leaves})")


def _ex2_2(max_n, k, seed):
    for leaves, inst in _stars(max_n):
        pred = _tree_predictor(inst.g)
        for kk in inst.ks(k):
            yield _finding("ex2.2", inst, kk, "sz", cf.sz_star_formula(leaves, kk), inst.sz(kk), pred)
            yield _finding("ex2.2", inst, kk, "rsz", cf.rsz_star_formula(leaves, kk), inst.rsz(kk), pred)


def _ex3_2(max_n, k, seed):
    for leaves, inst in _stars(max_n):
        yield _finding("ex3.2", inst, None, "edge-orbits", 1, len(inst.orbits.orbits))
        for kk in inst.ks(k):
            yield _finding("ex3.2", inst, kk, "sz", cf.sz_star_formula(leaves, kk), inst.sz(kk))
            yield _finding("ex3.2", inst, kk, "rsz", cf.rsz_star_formula(leaves, kk), inst.rsz(kk))


def _thm3_1(max_n, k, seed):
    for inst in connected_corpus(max_n, seed):
        if inst.g.n > 12:
            continue
        for kk in inst.ks(k):
            good, witness = 0, None
            for orbit in inst.orbits.orbits:
                keys = [inst.classification(e, kk) for e in orbit]
                ref = keys[0]
                bad = next((c for c in keys
                            if sorted((c.n_u, c.n_v)) != sorted((ref.n_u, ref.n_v)) or c.n_0 != ref.n_0),
                           None)
                if bad is None:
                    good += 1
                elif witness is None:
                    witness = {"edges": [list(ref.edge), list(bad.edge)],
                               "classifications": [[ref.n_u, ref.n_v, ref.n_0], [bad.n_u, bad.n_v, bad.n_0]]}
            r = len(inst.orbits.orbits)
            yield Finding("thm3.1", inst.describe(kk), "orbits-with-constant-pair", r, good,
                          "confirmed" if good == r else "counterexample", witness)


def _cor3_2(max_n, k, seed):
    def instances():
        for inst in connected_corpus(min(max_n, EXHAUSTIVE_MAX_N), seed):
            yield inst
        yield from family_corpus(max_n)

    for inst in instances():
        for kk in inst.ks(k):
            yield _finding("cor3.2", inst, kk, "sz", inst.sz_orbits(kk), inst.sz(kk))
            yield _finding("cor3.2", inst, kk, "rsz", inst.rsz_orbits(kk), inst.rsz(kk))


def _complete_instances(max_n):
    _check_max_n(max_n)
    for n in range(3, max_n + 1):
        yield n, Instance(complete(n), f"complete({n})")


def _ex3_1_sz(max_n, k, seed):
    for n, inst in _complete_instances(max_n):
        for kk in inst.ks(k):
            yield _finding("ex3.1-sz", inst, kk, "sz", cf.sz_complete_formula(n, kk), inst.sz(kk), _all_ties)


def _ex3_1_rsz(max_n, k, seed):
    note = cf.FORMULAS["ex3.1-rsz-paper"][1]
    for n, inst in _complete_instances(max_n):
        for kk in inst.ks(k):
            actual = inst.rsz(kk)
            corrected = cf.rsz_complete_corrected(n, kk)
            yield _finding(
                "ex3.1-rsz", inst, kk, "rsz", Quarter.of(cf.rsz_complete_paper(n, kk)), actual, _all_ties,
                note=note,
                alternate={"formula_id": "ex3.1-rsz-corrected", "value": corrected,
                           "matches_actual": corrected == actual},
            )


def _multipartite(max_n):
    _check_max_n(max_n)
    for parts in multipartite_instances(max_n):
        yield parts, Instance(complete_multipartite(parts), _mp_name(parts))


def _thm3_3_sz(max_n, k, seed):
    for parts, inst in _multipartite(max_n):
        pred = _multipartite_predictor(parts)
        for kk in inst.ks(k):
            if kk > min(parts):
                continue
            yield _finding("thm3.3-sz", inst, kk, "sz", cf.sz_multipartite_formula(parts, kk), inst.sz(kk), pred)


def _thm3_3_n0(max_n, k, seed):
    note = cf.FORMULAS["thm3.3-n0-paper"][1]
    for parts, inst in _multipartite(max_n):
        starts = [sum(parts[:i]) for i in range(len(parts))]
        for kk in inst.ks(k):
            if kk > min(parts):
                continue
            for i, j in itertools.combinations(range(len(parts)), 2):
                e = (starts[i], starts[j])
                actual = inst.classification(e, kk).n_0
                corrected = cf.n0_multipartite_corrected(parts, i, j, kk)
                expected = cf.n0_multipartite_paper(parts, i, j, kk)
                ok = expected == actual
                witness = None
                if not ok:
                    witness = {"edge": list(e), "parts": [i, j], "classification":
                               list(_triple(inst.classification(e, kk)))}
                yield Finding(
                    "thm3.3-n0", {**inst.describe(kk), "parts": [i, j]}, "n0", expected, actual,
                    "confirmed" if ok else "counterexample", witness, note,
                    {"formula_id": "thm3.3-n0-corrected", "value": corrected,
                     "matches_actual": corrected == actual},
                )


def _triple(c: EdgeClassification):
    return c.n_u, c.n_v, c.n_0


def _penult(inst: Instance, k: int | None) -> int | None:
    kk = inst.g.n - 1
    return kk if k is None or k == kk else None


def _thm4_1(max_n, k, seed):
    for inst in tree_corpus(max_n):
        kk = _penult(inst, k)
        if kk is None:
            continue
        n, p = inst.g.n, inst.pendant
        pred = _tree_predictor(inst.g)
        yield _finding("thm4.1", inst, kk, "sz", cf.sz_penult_tree(n, p), inst.sz(kk), pred)
        yield _finding("thm4.1", inst, kk, "rsz", cf.rsz_penult_tree(n, p), inst.rsz(kk), pred)


def _thm4_2(max_n, k, seed):
    note = cf.PENULT_GRAPH_NOTE
    for inst in connected_corpus(max_n, seed):
        kk = _penult(inst, k)
        if kk is None:
            continue
        m, p = inst.g.m, inst.pendant
        pred = _pendant_predictor(inst.g)
        yield _finding("thm4.2", inst, kk, "sz", cf.sz_penult_graph_paper(m, p), inst.sz(kk), pred, note=note)
        yield _finding("thm4.2", inst, kk, "rsz", cf.rsz_penult_graph_paper(m, p), inst.rsz(kk), pred,
                       note=note)


def _thm5_1_1(max_n, k, seed):
    for inst in connected_corpus(max_n, seed):
        for kk in inst.ks(k):
            if inst.kappa >= inst.g.n - kk:
                yield _finding("thm5.1-1", inst, kk, "sz", inst.g.m, inst.sz(kk), _all_ties)


def _thm5_1_2(max_n, k, seed):
    for inst in connected_corpus(max_n, seed):
        for kk in inst.ks(k):
            if inst.kappa < inst.g.n - kk:
                lo, hi = cf.sz_bounds(inst.g.n, inst.g.m, kk)
                actual = inst.sz(kk)
                yield _finding("thm5.1-2", inst, kk, "sz-bounds", [lo, hi], actual, ok=lo <= actual <= hi)


def remark1_extremality(n: int) -> Finding:
    """Star minimises and path maximises ``rSz_{n-1}`` over trees of order ``n``, each uniquely."""
    if not 3 <= n <= EXTREMAL_MAX_N:
        raise CapError(f"remark1 check supports 3 <= n <= {EXTREMAL_MAX_N}")
    insts = [Instance(t) for t in enumerate_trees(n)]
    values = [inst.rsz(n - 1) for inst in insts]
    star_i = next(i for i, inst in enumerate(insts) if max(inst.g.degrees()) == n - 1)
    path_i = next(i for i, inst in enumerate(insts) if max(inst.g.degrees()) <= 2)
    lo, hi = min(values), max(values)
    unique = values.count(lo) == 1 and values.count(hi) == 1
    expected = {"min": values[star_i], "max": values[path_i], "unique": True}
    actual = {"min": lo, "max": hi, "unique": unique if n > 3 else True}
    ok = expected == actual
    witness = None
    if not ok:
        witness = {"trees": [insts[i].name for i, v in enumerate(values) if v in (lo, hi)]}
    return Finding("remark1", {"graph": f"trees({n})", "n": n, "k": n - 1, "trees": len(insts)},
                   "rsz-extremes", expected, actual, "confirmed" if ok else "counterexample", witness)


def _remark1(max_n, k, seed):
    for n in range(3, min(max_n, EXTREMAL_MAX_N) + 1):
        if k is None or k == n - 1:
            yield remark1_extremality(n)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def conjecture_scan(n_max: int, k: int) -> ConjectureReport:
    """Compare ``Sz_k`` against ``Sz`` on every pair of trees of order ``k+1 .. n_max``.

    Opposite strict signs are violations; a tie in exactly one index is counted
    in ``tie_pairs``.
    """
    if n_max > EXTREMAL_MAX_N:
        raise CapError(f"conjecture scan supports n_max <= {EXTREMAL_MAX_N}")
    if k < 3:
        raise GraphError("conjecture scan needs k >= 3 (k = 2 is the classical index itself)")
    report = ConjectureReport(n_max, k)
    trees = []
    for n in range(max(k + 1, 2), n_max + 1):
        for t in enumerate_trees(n):
            inst = Instance(t)
            trees.append((inst.name, inst.sz(k), classical_szeged(t)))
    for (a, ska, sa), (b, skb, sb) in itertools.combinations(trees, 2):
        report.pairs_checked += 1
        s_k, s_2 = _sign(ska - skb), _sign(sa - sb)
        if s_k * s_2 < 0:
            report.violations.append((a, b, k))
        elif (s_k == 0) != (s_2 == 0):
            report.tie_pairs += 1
    return report


def _conjecture(max_n, k, seed):
    ks = range(3, max_n) if k is None else [k]
    for kk in ks:
        rep = conjecture_scan(max_n, kk)
        witness = None
        if rep.violations:
            a, b, _ = rep.violations[0]
            witness = {"trees": [a, b]}
        yield Finding("conjecture", {"graph": f"trees(<= {max_n})", "k": kk, "pairs": rep.pairs_checked},
                      "violations", 0, len(rep.violations),
                      "confirmed" if not rep.violations else "counterexample", witness,
                      note=f"tie_pairs={rep.tie_pairs}")


_CLAIM_RUNNERS = {
    "thm2.1": _thm2_1,
    "ex2.1": _ex2_1,
    "ex2.2": _ex2_2,
    "thm3.1": _thm3_1,
    "cor3.2": _cor3_2,
    "ex3.1-sz": _ex3_1_sz,
    "ex3.1-rsz": _ex3_1_rsz,
    "ex3.2": _ex3_2,
    "thm3.3-sz": _thm3_3_sz,
    "thm3.3-n0": _thm3_3_n0,
    "thm4.1": _thm4_1,
    "remark1": _remark1,
    "thm4.2": _thm4_2,
    "thm5.1-1": _thm5_1_1,
    "thm5.1-2": _thm5_1_2,
    "conjecture": _conjecture,
}


def verify_claim(claim_id: str, max_n: int = 6, k: int | None = None, seed: int = 0) -> list[Finding]:
    """All findings for one claim over the desk-scale corpus up to order ``max_n``."""
    try:
        runner = _CLAIM_RUNNERS[claim_id]
    except KeyError:
        raise GraphError(f"unknown claim id {claim_id!r}") from None
    return list(runner(max_n, k, seed))


def verify_instance(claim_id: str, g: Graph, k: int | None = None, name: str | None = None) -> list[Finding]:
    """Findings for one claim on a single supplied graph (graph-level claims only)."""
    inst = Instance(g, name)
    if claim_id == "thm4.2":
        kk = _penult(inst, k)
        if kk is None:
            return []
        m, p = g.m, inst.pendant
        pred = _pendant_predictor(g)
        note = cf.PENULT_GRAPH_NOTE
        return [
            _finding("thm4.2", inst, kk, "sz", cf.sz_penult_graph_paper(m, p), inst.sz(kk), pred, note=note),
            _finding("thm4.2", inst, kk, "rsz", cf.rsz_penult_graph_paper(m, p), inst.rsz(kk), pred, note=note),
        ]
    if claim_id == "thm5.1-1":
        return [_finding("thm5.1-1", inst, kk, "sz", g.m, inst.sz(kk), _all_ties)
                for kk in inst.ks(k) if inst.kappa >= g.n - kk]
    if claim_id == "thm5.1-2":
        out = []
        for kk in inst.ks(k):
            lo, hi = cf.sz_bounds(g.n, g.m, kk)
            a = inst.sz(kk)
            out.append(_finding("thm5.1-2", inst, kk, "sz-bounds", [lo, hi], a, ok=lo <= a <= hi))
        return out
    if claim_id == "cor3.2":
        return [f for kk in inst.ks(k) for f in (
            _finding("cor3.2", inst, kk, "sz", inst.sz_orbits(kk), inst.sz(kk)),
            _finding("cor3.2", inst, kk, "rsz", inst.rsz_orbits(kk), inst.rsz(kk)),
        )]
    raise GraphError(f"claim {claim_id!r} is not checkable on a single supplied graph")
