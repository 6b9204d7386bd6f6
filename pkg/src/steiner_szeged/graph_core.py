"""Simple undirected graphs on vertices ``0..n-1``.

Graphs are immutable and hashable. Vertex subsets are passed around as
bit masks (bit ``v`` set means vertex ``v`` is in the subset).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62
TREE_MAX_ORDER = 10
CONNECTIVITY_MAX_ORDER = 16


class GraphError(ValueError):
    """Invalid graph data or a graph that violates an operation's precondition."""


class ParseError(GraphError):
    """Malformed textual or graph6 input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapError(GraphError):
    """Input exceeds a desk-scale computational cap (order, subset size, memory)."""


Edge = tuple[int, int]


def _canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        seen = set()
        adj = [0] * self.n
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            e = _canon_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return [w for w in range(self.n) if self.adj[v] >> w & 1]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        return Graph(self.n, tuple(_canon_edge(perm[u], perm[v]) for u, v in self.edges))

    def __str__(self) -> str:
        return emit_graph6(self)


# ---------------------------------------------------------------------------
# input formats


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list format: a vertex count line, then ``u v`` lines.

    Blank lines and lines starting with ``#`` are ignored.
    """
    n = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected the vertex count", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"vertex count {fields[0]!r} is not an integer", lineno) from None
            if not 1 <= n <= MAX_VERTICES:
                raise ParseError(f"vertex count {n} outside 1..{MAX_VERTICES}", lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = _canon_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError("missing vertex count")
    return Graph(n, tuple(edges))


def emit_edgelist(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def parse_graph6(data: bytes | str) -> Graph:
    """Decode a single graph in the short (n <= 62) graph6 form."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ParseError("truncated graph6 input: no size byte")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise ParseError(f"graph6 byte {byte} at offset {pos} outside 63..126")
    if data[0] == 126:
        raise CapError(f"graph6 long form (n > {GRAPH6_MAX_VERTICES}) is unsupported")
    n = data[0] - 63
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    body = data[1:]
    if len(body) < nbytes:
        raise ParseError(f"truncated graph6 input: need {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise ParseError(f"graph6 input has {len(body) - nbytes} trailing bytes")
    if n == 0:
        raise GraphError("graph6 encodes the empty graph; at least one vertex is required")
    bits = []
    for byte in body:
        x = byte - 63
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, tuple(edges))


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise CapError(f"graph6 short form supports n <= {GRAPH6_MAX_VERTICES}")
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for p in range(0, len(bits), 6):
        x = 0
        for b in bits[p:p + 6]:
            x = (x << 1) | b
        out.append(chr(x + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# named families


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()


FAMILY_KINDS = ("path", "cycle", "star", "complete", "complete_multipartite", "paw")


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """Star with center 0 and ``leaves`` pendant vertices."""
    if leaves < 1:
        raise GraphError("a star needs at least one leaf")
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if len(parts) < 2:
        raise GraphError("a complete multipartite graph needs at least 2 parts")
    if any(a < 1 for a in parts):
        raise GraphError("part sizes must be >= 1")
    blocks = []
    start = 0
    for a in parts:
        blocks.append(range(start, start + a))
        start += a
    edges = [
        (u, v)
        for bi, bj in itertools.combinations(blocks, 2)
        for u in bi
        for v in bj
    ]
    return Graph(start, tuple(edges))


def paw() -> Graph:
    return Graph(4, ((0, 1), (0, 2), (1, 2), (2, 3)))


def generate(spec: FamilySpec) -> Graph:
    """Build a named family member with its canonical labeling.

    ``star`` takes the number of leaves (so ``star(4)`` has 5 vertices),
    matching the ``S_{n+1}`` convention for stars.
    """
    kind, params = spec.kind, tuple(spec.params)
    if kind == "paw":
        if params:
            raise GraphError("paw takes no parameters")
        return paw()
    if kind == "complete_multipartite":
        return complete_multipartite(params)
    if kind not in FAMILY_KINDS:
        raise GraphError(f"unknown family {kind!r}")
    if len(params) != 1:
        raise GraphError(f"{kind} takes exactly one parameter")
    (p,) = params
    if p < 1:
        raise GraphError(f"{kind} parameter must be positive")
    return {"path": path, "cycle": cycle, "star": star, "complete": complete}[kind](p)


# ---------------------------------------------------------------------------
# structural predicates


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Vertices reachable from ``start`` inside the vertex mask ``within``."""
    if within is None:
        within = g.full_mask
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= g.adj[low.bit_length() - 1]
            f ^= low
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def induces_connected(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    return component_mask(g, start, mask) == mask


def is_connected(g: Graph) -> bool:
    return induces_connected(g, g.full_mask)


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("graph is not connected")


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def pendant_edge_count(g: Graph) -> int:
    """Number of edges with at least one endpoint of degree 1."""
    deg = g.degrees()
    return sum(1 for u, v in g.edges if deg[u] == 1 or deg[v] == 1)


def vertex_connectivity(g: Graph) -> int:
    """Smallest separator size, found by brute force over vertex subsets.

    Complete graphs get ``n - 1``.
    """
    if g.n > CONNECTIVITY_MAX_ORDER:
        raise CapError(f"vertex connectivity is capped at n <= {CONNECTIVITY_MAX_ORDER}")
    require_connected(g)
    full = g.full_mask
    for size in range(0, g.n - 1):
        for cut in itertools.combinations(range(g.n), size):
            cmask = 0
            for v in cut:
                cmask |= 1 << v
            if not induces_connected(g, full & ~cmask):
                return size
    return g.n - 1


# ---------------------------------------------------------------------------
# canonical forms


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition (isomorphism-equivariant)."""
    while True:
        cell_masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(bin(g.adj[v] & cm).count("1") for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    for j in range(1, g.n):
        vj = order[j]
        for i in range(j):
            code = (code << 1) | (g.adj[order[i]] >> vj & 1)
    return code


def canonical_form(g: Graph) -> tuple[int, int]:
    """A complete isomorphism invariant: ``(n, code)``.

    Individualization-refinement search; vertices that are twins inside the
    target cell are interchangeable by an automorphism fixing the current
    partition, so only one of each twin class is branched on.
    """
    best = None

    def search(cells: list[list[int]]):
        nonlocal best
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            code = _leaf_code(g, [c[0] for c in cells])
            if best is None or code < best:
                best = code
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any((g.adj[v] & ~(1 << w)) == (g.adj[w] & ~(1 << v)) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return (g.n, best)


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    n, code = canonical_form(g)
    edges = []
    bit = n * (n - 1) // 2 - 1
    for j in range(1, n):
        for i in range(j):
            if code >> bit & 1:
                edges.append((i, j))
            bit -= 1
    return Graph(n, tuple(edges))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def _centroids(g: Graph) -> list[int]:
    n = g.n
    best = n
    out: list[int] = []
    for v in range(n):
        rest = g.full_mask & ~(1 << v)
        largest = 0
        for w in g.neighbors(v):
            largest = max(largest, bin(component_mask(g, w, rest)).count("1"))
        if largest < best:
            best, out = largest, [v]
        elif largest == best:
            out.append(v)
    return out


def tree_canonical_string(t: Graph) -> str:
    """Parenthesis encoding of the tree rooted at its centroid (min over two centroids)."""
    if not is_tree(t):
        raise GraphError("not a tree")

    def encode(v: int, parent: int) -> str:
        return "(" + "".join(sorted(encode(w, v) for w in t.neighbors(v) if w != parent)) + ")"

    return min(encode(c, -1) for c in _centroids(t))


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on ``n`` vertices from a Prüfer sequence of length ``n - 2``."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph(n, tuple(edges))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    out: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            grown = Graph(n, t.edges + ((v, n - 1),))
            key = tree_canonical_string(grown)
            if key not in out:
                out[key] = grown
    return tuple(out[key] for key in sorted(out, key=lambda s: (-len(s), s)))


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees of order ``n``.

    Trees grow leaf by leaf from order ``n - 1`` and are deduplicated by
    centroid-rooted canonical strings.
    """
    if not 2 <= n <= TREE_MAX_ORDER:
        raise CapError(f"tree enumeration supports 2 <= n <= {TREE_MAX_ORDER}")
    yield from _trees(n)


# ---------------------------------------------------------------------------
# graph corpora


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    found: dict[tuple[int, int], Graph] = {}
    for h in _connected_graphs(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            extra = tuple((v, n - 1) for v in range(n - 1) if nbrs >> v & 1)
            key = canonical_form(Graph(n, h.edges + extra))
            if key not in found:
                found[key] = canonical_graph(Graph(n, h.edges + extra))
    return tuple(found[key] for key in sorted(found))


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs of order ``n`` up to isomorphism (canonically labelled).

    Built by adding a vertex to each connected graph of order ``n - 1`` (every
    connected graph has a non-cut vertex) and deduplicating canonically.
    """
    if not 1 <= n <= 8:
        raise CapError("exhaustive connected-graph generation supports 1 <= n <= 8")
    return list(_connected_graphs(n))


def random_connected_graph(n: int, rng: random.Random, p: float = 0.35) -> Graph:
    """Random spanning tree (random Prüfer code) plus G(n, p) extra edges."""
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((0, 1),))
    tree = prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
    edges = set(tree.edges)
    for e in itertools.combinations(range(n), 2):
        if e not in edges and rng.random() < p:
            edges.add(e)
    return Graph(n, tuple(sorted(edges)))
