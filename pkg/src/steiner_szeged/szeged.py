"""Edge classification and the Steiner (revised) Szeged indices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .graph_core import Edge, Graph, GraphError, require_connected
from .steiner import SteinerTable, all_pairs_distances, build_table, mask_of


@dataclass(frozen=True)
class Quarter:
    """Exact non-negative rational with denominator 4, stored as its numerator."""

    quarters: int

    def __post_init__(self):
        if self.quarters < 0:
            raise ValueError("Quarter values are non-negative")

    @classmethod
    def of(cls, value: int | Fraction | "Quarter") -> "Quarter":
        if isinstance(value, Quarter):
            return value
        q = Fraction(value) * 4
        if q.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/4")
        return cls(int(q))

    def __add__(self, other):
        if isinstance(other, int):
            return Quarter(self.quarters + 4 * other)
        if isinstance(other, Quarter):
            return Quarter(self.quarters + other.quarters)
        return NotImplemented

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return Quarter(self.quarters * other)
        return NotImplemented

    __rmul__ = __mul__

    def as_fraction(self) -> Fraction:
        return Fraction(self.quarters, 4)

    def __eq__(self, other):
        if isinstance(other, Quarter):
            return self.quarters == other.quarters
        if isinstance(other, (int, Fraction)):
            return self.as_fraction() == other
        return NotImplemented

    def _cmp_value(self, other) -> Fraction:
        if isinstance(other, Quarter):
            return other.as_fraction()
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        raise TypeError(f"cannot compare Quarter with {type(other).__name__}")

    def __lt__(self, other):
        return self.as_fraction() < self._cmp_value(other)

    def __le__(self, other):
        return self.as_fraction() <= self._cmp_value(other)

    def __gt__(self, other):
        return self.as_fraction() > self._cmp_value(other)

    def __ge__(self, other):
        return self.as_fraction() >= self._cmp_value(other)

    def __hash__(self):
        return hash(self.as_fraction())

    def __str__(self) -> str:
        f = self.as_fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class EdgeClassification:
    edge: Edge
    k: int
    n_u: int
    n_v: int
    n_0: int

    def sz_term(self) -> int:
        return (self.n_u + 1) * (self.n_v + 1)

    def rsz_term(self) -> Quarter:
        # (n_u + n_0/2 + 1)(n_v + n_0/2 + 1) = (2n_u + n_0 + 2)(2n_v + n_0 + 2) / 4
        return Quarter((2 * self.n_u + self.n_0 + 2) * (2 * self.n_v + self.n_0 + 2))


def check_k(g: Graph, k: int) -> None:
    if not 2 <= k <= g.n - 1:
        raise GraphError(f"subset size k={k} outside 2..{g.n - 1} for n={g.n}")


def _table_for(g: Graph, k: int, table: SteinerTable | None) -> SteinerTable:
    if table is None:
        return build_table(g, k)
    if table.graph != g or table.k_max < k:
        raise GraphError("Steiner table does not cover this graph and subset size")
    return table


def subset_sides(table: SteinerTable, e: Edge, k: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Each ``(k-1)``-subset avoiding ``u`` and ``v``, with the side it favours.

    Side is ``-1`` when ``S'+u`` is strictly cheaper, ``+1`` when ``S'+v`` is,
    ``0`` on ties. Subsets come in lexicographic order.
    """
    u, v = e
    others = [w for w in range(table.graph.n) if w != u and w != v]
    bu, bv = 1 << u, 1 << v
    for sub in itertools.combinations(others, k - 1):
        m = mask_of(sub)
        du, dv = table[m | bu], table[m | bv]
        yield sub, (du > dv) - (du < dv)


def classify_edge(table: SteinerTable, g: Graph, e: Edge, k: int) -> EdgeClassification:
    check_k(g, k)
    u, v = min(e), max(e)
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if table.k_max < k:
        raise GraphError(f"Steiner table covers subsets up to {table.k_max}, need {k}")
    counts = [0, 0, 0]
    for _, side in subset_sides(table, (u, v), k):
        counts[side + 1] += 1
    n_u, n_0, n_v = counts
    return EdgeClassification((u, v), k, n_u, n_v, n_0)


def classify_all(g: Graph, k: int, table: SteinerTable | None = None) -> list[EdgeClassification]:
    """Classifications of every edge, in canonical edge order."""
    require_connected(g)
    check_k(g, k)
    table = _table_for(g, k, table)
    out = [classify_edge(table, g, e, k) for e in g.edges]
    total = comb(g.n - 2, k - 1)
    for c in out:
        assert c.n_u + c.n_v + c.n_0 == total, c
    return out


def sz_k(g: Graph, k: int, table: SteinerTable | None = None) -> int:
    """kth Steiner Szeged index: sum over edges of ``(n_u + 1)(n_v + 1)``."""
    return sum(c.sz_term() for c in classify_all(g, k, table))


def rsz_k(g: Graph, k: int, table: SteinerTable | None = None) -> Quarter:
    """kth Steiner revised Szeged index (exact)."""
    return sum((c.rsz_term() for c in classify_all(g, k, table)), Quarter(0))


def classical_counts(g: Graph) -> list[tuple[Edge, int, int, int]]:
    """Per edge ``uv``: vertices strictly closer to ``u``, to ``v``, and equidistant."""
    d = all_pairs_distances(g)
    out = []
    for u, v in g.edges:
        du, dv = d[u], d[v]
        out.append(((u, v), int((du < dv).sum()), int((dv < du).sum()), int((du == dv).sum())))
    return out


def classical_szeged(g: Graph) -> int:
    return sum(nu * nv for _, nu, nv, _ in classical_counts(g))


def classical_revised_szeged(g: Graph) -> Quarter:
    return sum(
        (Quarter((2 * nu + n0) * (2 * nv + n0)) for _, nu, nv, n0 in classical_counts(g)),
        Quarter(0),
    )
