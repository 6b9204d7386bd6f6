"""
Checking claims against the oracle
==================================

Each claim id runs over a corpus of small graphs. Findings record the
formula value, the oracle value and, when they differ, a witness.
"""

from collections import Counter

from steiner_szeged import cycle, paw
from steiner_szeged.verify import CLAIMS, verify_claim, verify_instance

for claim in CLAIMS:
    if claim == "conjecture":
        continue
    tally = Counter(f.status for f in verify_claim(claim, max_n=6))
    print(f"{claim:22s}", dict(tally))

# a single counterexample, with its witness
(f,) = verify_instance("thm5.1-1", cycle(5), k=3)
print(f.to_record())
print(verify_instance("thm4.2", paw())[0].to_record())
