"""The planar counterexample: a face hypergraph with a one-value hole.

Every planar triangulation with all vertex degrees even (Eulerian) has
a proper 3-coloring, so its face hypergraph (one 3-edge per triangular
face, same vertices) always has chi = 3.  One might hope its complete
colorings interpolate.  They don't: enumerating all triangulations on
12 vertices finds exactly one Eulerian class whose face hypergraph has
a complete 6-coloring but no complete 5-coloring.
"""

from hypercolor import spectrum
from hypercolor.triangulations import (
    enumerate_triangulations,
    face_hypergraph,
    find_gap_face_hypergraphs,
    is_eulerian,
    octahedron,
    serialize_embedding,
    three_coloring,
)

# Warm-up: the octahedron is the smallest Eulerian triangulation.
oc = octahedron()
print("octahedron 3-coloring classes:", three_coloring(oc).classes())
print("octahedron face spectrum:", spectrum(face_hypergraph(oc)).feasible)

# Enumerate everything on 12 vertices (flip-graph closure from the
# stacked seed, deduplicated by canonical form).
classes = enumerate_triangulations(12)
eulerian = [e for e in classes if is_eulerian(e)]
print(f"\n12-vertex triangulation classes: {len(classes)}")
print(f"Eulerian among them: {len(eulerian)}")

hits = find_gap_face_hypergraphs(12)
print(f"classes whose face hypergraph skips t=5 but reaches t=6: {len(hits)}")

emb, report = hits[0]
print("\nthe unique hit:")
print(serialize_embedding(emb))
print("degree sequence:", sorted(emb.degrees()))
print("face hypergraph spectrum:", report.feasible)
print("chi:", report.chi, " psi:", report.psi)
