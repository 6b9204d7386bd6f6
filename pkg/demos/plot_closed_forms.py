"""
Closed forms against direct computation
=======================================

Several families have closed forms. Most agree with the direct sum.
The revised index on complete graphs does not, and neither does the
published tie count for multipartite graphs once k >= 3.
"""

from steiner_szeged import closed_form as cf
from steiner_szeged import complete, complete_multipartite, enumerate_trees, rsz_k, sz_k

# trees: every tree on 7 vertices, every k
for t in enumerate_trees(7):
    assert all(cf.sz_tree_formula(t, k) == sz_k(t, k) for k in range(2, 7))
print("tree formula holds on all", len(list(enumerate_trees(7))), "trees of order 7")

for n in (4, 5, 6):
    print(f"K_{n}, k=2: published rSz {cf.rsz_complete_paper(n, 2)},",
          f"corrected {cf.rsz_complete_corrected(n, 2)}, direct {rsz_k(complete(n), 2)}")

parts = (3, 3)
print("n_0 on K_{3,3}, k=3:", "published", cf.n0_multipartite_paper(parts, 0, 1, 3),
      "corrected", cf.n0_multipartite_corrected(parts, 0, 1, 3))
print("Sz_3(K_{3,3}) =", sz_k(complete_multipartite(parts), 3), "=", cf.sz_multipartite_formula(parts, 3))
