"""
Steiner distance on small graphs
================================

The Steiner distance of a vertex set is the size of the smallest tree
that contains it. Below we compute it with the subset DP and check it
against the brute force search over connected induced subgraphs.
"""

from steiner_szeged import cycle, paw, steiner_wiener
from steiner_szeged.steiner import build_table, steiner_distance, steiner_distance_oracle

# three vertices spread around a 6-cycle need a path of 4 edges
g = cycle(6)
print("d({0,2,4}) on C_6:", steiner_distance(g, [0, 2, 4]))
print("oracle agrees:", steiner_distance_oracle(g, [0, 2, 4]))

# a table holds every subset of size <= k at once
table = build_table(paw(), 3)
for size in (2, 3):
    print(size, dict(table.items(size)))

# the Steiner Wiener index sums distances over all k-subsets
for k in range(2, 7):
    print(f"SW_{k}(C_6) =", steiner_wiener(g, k))
