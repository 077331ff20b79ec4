"""Rediscovering the smallest known spectrum gaps by randomized search.

Candidates come from one construction idea: take all 3-subsets of a
small base vertex set, split some base vertices into two copies, and
for each edge choose which copy it uses.  The search space is the
choice bits; the score is how close the lifted hypergraph's spectrum
is to a target.

Two targets matter historically: a 9-vertex instance with spectrum
{3, 5} (the smallest possible gap) and a 12-vertex instance with
spectrum {3, 6}, where psi = 2 * chi.
"""

from hypercolor import brute_force_spectrum, split_lift
from hypercolor.gapsearch import certify_gap_instance, split_search, structural_filters

print("searching 9-vertex instances (base 5, split 4 of 5)...")
res = split_search(5, range(4), require={3, 5}, forbid={4},
                   budget=2000, seed=0)
print("  evaluations:", res.stats["candidates"], " hits:", len(res.hits))
pattern, report = res.hits[0]
H = split_lift(pattern)
print("  found:", H, "spectrum:", report.feasible)
print("  brute-force confirmation:", sorted(brute_force_spectrum(H)))

print("\nsearching 12-vertex instances (base 6, split all)...")
res12 = split_search(6, range(6), require={3, 6}, forbid={4, 5},
                     budget=4000, seed=0)
print("  evaluations:", res12.stats["candidates"], " hits:", len(res12.hits))
p12, r12 = res12.hits[0]
H12 = split_lift(p12)
print("  found:", H12, "spectrum:", r12.feasible)

feats = structural_filters(H12)
print("  independence number:", feats.independence_number,
      " maximum independent sets:", feats.max_set_count)

verdict = certify_gap_instance(H12, require={3, 6}, forbid={4, 5})
print("  independent certification:", verdict["ok"])
