"""First steps: build a hypergraph, ask for its coloring spectrum.

A complete t-coloring must be proper (no hyperedge repeats a color),
use all t colors, and realize every k-subset of colors on some edge.
The spectrum is the set of t for which one exists; its minimum is the
chromatic number chi, its maximum the achromatic number psi.
"""

from hypercolor import Hypergraph, complete_uniform, is_complete, spectrum

# The 4-vertex path is the classic example where the spectrum has more
# than one value: 2 colors work (alternate), and so do 3 (the middle
# edge picks up the third pair).
path = Hypergraph(4, 2, [(0, 1), (1, 2), (2, 3)])
report = spectrum(path)
print("path on 4 vertices")
print("  chi =", report.chi, " psi =", report.psi)
print("  feasible sizes:", report.feasible)
for t, coloring in sorted(report.witnesses.items()):
    print(f"  witness for t={t}:", coloring.colors)
    assert is_complete(path, coloring)

# A complete 3-uniform hypergraph is maximally rigid: any two vertices
# share an edge, so only the all-distinct coloring is proper.
K63 = complete_uniform(6, 3)
print("\nall 3-subsets of 6 vertices")
print("  spectrum:", spectrum(K63).feasible)

# Reports serialize to JSON for scripting.
print("\nJSON form of the path report:")
print(report.to_json())
