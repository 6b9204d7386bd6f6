"""Automorphism groups, edge orbits, and orbit-accelerated index sums."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph_core import CapError, Edge, Graph, GraphError, require_connected
from .steiner import SteinerTable, build_table
from .szeged import EdgeClassification, Quarter, check_k, classify_edge

AUTOMORPHISM_MAX_ORDER = 12
AUTOMORPHISM_MAX_GROUP = 500_000


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __call__(self, v: int) -> int:
        return self.image[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``."""
        return Permutation(tuple(self.image[other.image[v]] for v in range(len(self.image))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))

    def edge_image(self, e: Edge) -> Edge:
        a, b = self.image[e[0]], self.image[e[1]]
        return (a, b) if a < b else (b, a)

    def is_automorphism_of(self, g: Graph) -> bool:
        return sorted(self.image) == list(range(g.n)) and all(
            g.has_edge(*self.edge_image(e)) for e in g.edges
        )


@dataclass(frozen=True)
class OrbitPartition:
    orbits: tuple[tuple[Edge, ...], ...]

    @property
    def representatives(self) -> tuple[Edge, ...]:
        return tuple(orbit[0] for orbit in self.orbits)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(orbit) for orbit in self.orbits)


def _vertex_invariants(g: Graph) -> list[tuple]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[w] for w in g.neighbors(v)))) for v in range(g.n)]


@lru_cache(maxsize=512)
def _automorphisms(g: Graph, max_group: int) -> tuple[Permutation, ...]:
    n = g.n
    inv = _vertex_invariants(g)
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(v: int):
        if v == n:
            found.append(Permutation(tuple(image)))
            if len(found) > max_group:
                raise CapError(f"automorphism group larger than {max_group}")
            return
        for w in range(n):
            if used[w] or inv[w] != inv[v]:
                continue
            # adjacency to every already-mapped vertex must be preserved
            if any(g.has_edge(v, x) != g.has_edge(w, image[x]) for x in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
        image[v] = -1

    extend(0)
    return tuple(found)


def automorphisms(g: Graph, max_order: int = AUTOMORPHISM_MAX_ORDER,
                  max_group: int = AUTOMORPHISM_MAX_GROUP) -> list[Permutation]:
    """Every automorphism of ``g``, as an explicit list (identity first).

    Backtracking over vertex images, pruned by degree and neighbour-degree
    multisets and by adjacency to the vertices already placed.
    """
    if g.n > max_order:
        raise CapError(f"automorphism search is capped at n <= {max_order}")
    return list(_automorphisms(g, max_group))


def edge_orbits(g: Graph, group: list[Permutation] | None = None) -> OrbitPartition:
    """Orbits of ``Aut(g)`` on the edge set; each orbit sorted, orbits ordered by least edge."""
    if group is None:
        group = automorphisms(g)
    remaining = set(g.edges)
    orbits = []
    for e in g.edges:
        if e not in remaining:
            continue
        orbit = sorted({p.edge_image(e) for p in group})
        remaining.difference_update(orbit)
        orbits.append(tuple(orbit))
    return OrbitPartition(tuple(orbits))


def orbit_classifications(g: Graph, k: int, table: SteinerTable | None = None,
                          orbits: OrbitPartition | None = None
                          ) -> list[tuple[tuple[Edge, ...], EdgeClassification]]:
    """One classification per orbit, taken at the orbit's least edge."""
    require_connected(g)
    check_k(g, k)
    if table is None:
        table = build_table(g, k)
    if table.graph != g or table.k_max < k:
        raise GraphError("Steiner table does not cover this graph and subset size")
    if orbits is None:
        orbits = edge_orbits(g)
    return [(orbit, classify_edge(table, g, orbit[0], k)) for orbit in orbits.orbits]


def sz_k_via_orbits(g: Graph, k: int, table: SteinerTable | None = None,
                    orbits: OrbitPartition | None = None) -> int:
    return sum(len(o) * c.sz_term() for o, c in orbit_classifications(g, k, table, orbits))


def rsz_k_via_orbits(g: Graph, k: int, table: SteinerTable | None = None,
                     orbits: OrbitPartition | None = None) -> Quarter:
    return sum(
        (c.rsz_term() * len(o) for o, c in orbit_classifications(g, k, table, orbits)),
        Quarter(0),
    )
