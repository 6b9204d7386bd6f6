"""
Steiner Szeged indices
======================

For every edge uv and each (k-1)-subset avoiding u and v we ask which
endpoint reaches the subset more cheaply. The counts give Sz_k and rSz_k.
"""

from steiner_szeged import classical_szeged, cycle, path, rsz_k, sz_k
from steiner_szeged.szeged import classify_all

g = cycle(5)
for c in classify_all(g, 3):
    print(c.edge, "n_u, n_v, n_0 =", (c.n_u, c.n_v, c.n_0))

print("Sz_3(C_5) =", sz_k(g, 3))
print("rSz_3(C_5) =", rsz_k(g, 3))

# at k = 2 the subsets are single vertices and we get back the classical index
for n in range(3, 8):
    assert sz_k(path(n), 2) == classical_szeged(path(n))
print("k=2 matches classical Szeged on paths")
