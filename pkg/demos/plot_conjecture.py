"""
Does the classical order survive for larger k?
==============================================

We compare all pairs of trees of orders k+1..n_max and look for pairs
where Sz and Sz_k order the two trees strictly in opposite directions.
"""

from steiner_szeged import path, star, sz_k
from steiner_szeged.szeged import classical_szeged
from steiner_szeged.verify import conjecture_scan

# the smallest reversal
print("P_4:", classical_szeged(path(4)), sz_k(path(4), 3))
print("S_4:", classical_szeged(star(3)), sz_k(star(3), 3))

for k in (3, 4):
    rep = conjecture_scan(8, k)
    print(f"k={k}: {rep.pairs_checked} pairs, {len(rep.violations)} reversals, {rep.tie_pairs} ties")
