"""Closed-form values and bounds for the Steiner Szeged indices.

Every formula is evaluated exactly as published. Where a published formula
disagrees with the defining sums, a ``*_corrected`` variant derived from
the partition identity ``n_u + n_v + n_0 = C(n-2, k-1)`` lives next to it
under its own id. Nothing here silently swaps one for the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Sequence

from .graph_core import Edge, Graph, GraphError, component_mask, is_tree
from .szeged import Quarter


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_range(k: int, lo: int, hi: int, what: str = "k") -> None:
    if not lo <= k <= hi:
        raise GraphError(f"{what}={k} outside {lo}..{hi}")


def split_sizes(t: Graph, e: Edge) -> tuple[int, int]:
    """Orders of the components of ``t - e`` containing ``e[0]`` and ``e[1]``."""
    u, v = e
    cut = Graph(t.n, tuple(f for f in t.edges if f != (min(e), max(e))))
    side_u = component_mask(cut, u)
    if side_u >> v & 1:
        raise GraphError(f"{e} is not a bridge")
    nu = bin(side_u).count("1")
    return nu, t.n - nu


# -- trees -------------------------------------------------------------------


def sz_tree_formula(t: Graph, k: int) -> int:
    """Sum over edges of ``(C(n_u - 1, k - 1) + 1)(C(n_v - 1, k - 1) + 1)``."""
    if not is_tree(t):
        raise GraphError("input is not a tree")
    _check_range(k, 2, t.n - 1)
    total = 0
    for e in t.edges:
        nu, nv = split_sizes(t, e)
        total += (binom(nu - 1, k - 1) + 1) * (binom(nv - 1, k - 1) + 1)
    return total


def sz_path_formula(n: int, k: int) -> int:
    _check_range(k, 2, n - 1)
    return sum((binom(i - 1, k - 1) + 1) * (binom(n - i - 1, k - 1) + 1) for i in range(1, n))


def n0_path(n: int, k: int, i: int) -> int:
    """Tie count on the ``i``-th path edge ``u_i u_{i+1}`` (1-based, as in ``P_n = u_1 ... u_n``)."""
    _check_range(k, 2, n - 1)
    _check_range(i, 1, n - 1, "i")
    return sum(binom(i - 1, j) * binom(n - i - 1, k - j - 1) for j in range(1, k - 1))


def rsz_path_formula(n: int, k: int) -> Quarter:
    _check_range(k, 2, n - 1)
    total = Quarter(0)
    for i in range(1, n):
        a, b, z = binom(i - 1, k - 1), binom(n - i - 1, k - 1), n0_path(n, k, i)
        total += Quarter((2 * a + z + 2) * (2 * b + z + 2))
    return total


def sz_star_formula(n: int, k: int) -> int:
    """Star with ``n`` leaves: ``n C(n-1, k-1) + n``. The revised index is equal."""
    _check_range(k, 2, n)
    return n * binom(n - 1, k - 1) + n


def rsz_star_formula(n: int, k: int) -> Quarter:
    return Quarter.of(sz_star_formula(n, k))


# -- complete and complete multipartite graphs --------------------------------


def sz_complete_formula(n: int, k: int) -> int:
    _check_range(k, 2, n - 1)
    return n * (n - 1) // 2


def rsz_complete_paper(n: int, k: int) -> int:
    """The published ``|E(K_n)| C(n-2, k-1)^2``."""
    _check_range(k, 2, n - 1)
    return n * (n - 1) // 2 * binom(n - 2, k - 1) ** 2


def rsz_complete_corrected(n: int, k: int) -> Quarter:
    """``|E(K_n)| (C(n-2, k-1)/2 + 1)^2``, from ``n_u = n_v = 0``, ``n_0 = C(n-2, k-1)``."""
    _check_range(k, 2, n - 1)
    z = binom(n - 2, k - 1)
    return Quarter((z + 2) ** 2) * (n * (n - 1) // 2)


def _check_parts(parts: Sequence[int], k: int) -> None:
    if len(parts) < 2 or any(a < 1 for a in parts):
        raise GraphError("need at least 2 parts of size >= 1")
    _check_range(k, 2, sum(parts) - 1)
    if k > min(parts):
        raise GraphError(f"k={k} exceeds the smallest part size {min(parts)}")


def sz_multipartite_formula(parts: Sequence[int], k: int) -> int:
    _check_parts(parts, k)
    total = 0
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            ai, aj = parts[i], parts[j]
            total += ai * aj * (binom(ai - 1, k - 1) + 1) * (binom(aj - 1, k - 1) + 1)
    return total


def n0_multipartite_paper(parts: Sequence[int], i: int, j: int, k: int) -> int:
    """Published tie count for an edge between parts ``i`` and ``j`` (0-based), verbatim."""
    _check_parts(parts, k)
    ai, aj = parts[i], parts[j]
    b = sum(parts) - ai - aj
    total = binom(b, k - 1)
    for p in range(1, ai - 1):
        for q in range(1, k - p):
            total += binom(ai - 2, p) * binom(aj - 1, q) * binom(b, k - 1 - (p + q))
    return total


def n0_multipartite_corrected(parts: Sequence[int], i: int, j: int, k: int) -> int:
    """``C(n-2, k-1) - C(a_i-1, k-1) - C(a_j-1, k-1)``."""
    _check_parts(parts, k)
    n = sum(parts)
    return binom(n - 2, k - 1) - binom(parts[i] - 1, k - 1) - binom(parts[j] - 1, k - 1)


def _rsz_multipartite(parts: Sequence[int], k: int, n0: Callable) -> Quarter:
    _check_parts(parts, k)
    total = Quarter(0)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            ai, aj = parts[i], parts[j]
            z = n0(parts, i, j, k)
            a, b = binom(ai - 1, k - 1), binom(aj - 1, k - 1)
            total += Quarter((2 * a + z + 2) * (2 * b + z + 2)) * (ai * aj)
    return total


def rsz_multipartite_paper(parts: Sequence[int], k: int) -> Quarter:
    return _rsz_multipartite(parts, k, n0_multipartite_paper)


def rsz_multipartite_corrected(parts: Sequence[int], k: int) -> Quarter:
    return _rsz_multipartite(parts, k, n0_multipartite_corrected)


# -- k = n - 1 ---------------------------------------------------------------


def sz_penult_tree(n: int, p: int) -> int:
    """Tree of order ``n`` with ``p`` pendant edges, ``k = n - 1``."""
    if n < 3:
        raise GraphError("need n >= 3")
    _check_range(p, 2, n - 1, "p")
    return n + p - 1


def rsz_penult_tree(n: int, p: int) -> Quarter:
    if n < 3:
        raise GraphError("need n >= 3")
    _check_range(p, 2, n - 1, "p")
    return Quarter(8 * p + 9 * (n - p - 1))


def sz_penult_graph_paper(m: int, p: int) -> int:
    """Published ``Sz_{n-1}(G) = p + m`` for a connected graph of size ``m``."""
    if m < 1:
        raise GraphError("need m >= 1")
    _check_range(p, 0, m, "p")
    return p + m


def rsz_penult_graph_paper(m: int, p: int) -> Quarter:
    if m < 1:
        raise GraphError("need m >= 1")
    _check_range(p, 0, m, "p")
    return Quarter(8 * p + 9 * (m - p))


# -- bounds ------------------------------------------------------------------


def sz_bounds(n: int, m: int, k: int) -> tuple[int, int]:
    """``(m, m (ceil(N/2) + 1)(floor(N/2) + 1))`` with ``N = C(n-2, k-1)``."""
    _check_range(k, 2, n - 1)
    big = binom(n - 2, k - 1)
    return m, m * (-(-big // 2) + 1) * (big // 2 + 1)


# -- registry ----------------------------------------------------------------


@dataclass(frozen=True)
class FormulaResult:
    value: int | Quarter | tuple
    formula_id: str
    status_note: str | None = None


PENULT_GRAPH_NOTE = (
    "holds only when, for every non-pendant edge uv, d(V - {u}) = d(V - {v})"
)

FORMULAS: dict[str, tuple[Callable, str | None]] = {
    "thm2.1": (sz_tree_formula, None),
    "ex2.1-sz": (sz_path_formula, None),
    "ex2.1-n0": (n0_path, None),
    "ex2.1-rsz": (rsz_path_formula, None),
    "ex2.2-sz": (sz_star_formula, None),
    "ex2.2-rsz": (rsz_star_formula, None),
    "ex3.1-sz": (sz_complete_formula, None),
    "ex3.1-rsz-paper": (rsz_complete_paper, "published formula omits the /2 and the +1"),
    "ex3.1-rsz-corrected": (rsz_complete_corrected, "restores the /2 and the +1"),
    "thm3.3-sz": (sz_multipartite_formula, None),
    "thm3.3-n0-paper": (
        n0_multipartite_paper,
        "misses tie subsets meeting B and only one of A_i, A_j; draws from a_i - 2 vertices of A_i",
    ),
    "thm3.3-n0-corrected": (n0_multipartite_corrected, "forced by the partition identity"),
    "thm3.3-rsz-paper": (rsz_multipartite_paper, "uses the published tie count"),
    "thm3.3-rsz-corrected": (rsz_multipartite_corrected, "uses the corrected tie count"),
    "thm4.1-sz": (sz_penult_tree, None),
    "thm4.1-rsz": (rsz_penult_tree, None),
    "thm4.2-sz-paper": (sz_penult_graph_paper, PENULT_GRAPH_NOTE),
    "thm4.2-rsz-paper": (rsz_penult_graph_paper, PENULT_GRAPH_NOTE),
    "thm5.1-bounds": (sz_bounds, None),
}


def evaluate(formula_id: str, *args) -> FormulaResult:
    try:
        fn, note = FORMULAS[formula_id]
    except KeyError:
        raise GraphError(f"unknown formula id {formula_id!r}") from None
    return FormulaResult(fn(*args), formula_id, note)
