"""
Using symmetry
==============

Edges in the same orbit of the automorphism group share their
classification, so one representative per orbit is enough.
"""

from steiner_szeged import complete_multipartite, paw, star, sz_k
from steiner_szeged.symmetry import automorphisms, edge_orbits, sz_k_via_orbits

for name, g in [("paw", paw()), ("S_5", star(4)), ("K_{2,2,2}", complete_multipartite((2, 2, 2)))]:
    part = edge_orbits(g)
    print(f"{name}: |Aut| = {len(automorphisms(g))}, orbit sizes {part.sizes}")
    print("  Sz_3 via orbits", sz_k_via_orbits(g, 3), "direct", sz_k(g, 3))
