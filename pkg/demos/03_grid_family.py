"""The grid family: designed so only the two extreme colorings survive.

Vertices form a k x r grid (k parts, r positions).  Each edge picks one
vertex per part, all on distinct positions, subject to an adjacency
restriction that makes the structure rigid.  Coloring by part is a
complete k-coloring; coloring by position is a complete r-coloring.
The family is engineered so that (for large r) nothing in a wide band
between k and r is feasible, giving spectra with arbitrarily long gaps.

This demo uses a small instance and verifies the machinery; the
proof-scale instances (r up to 34, tens of millions of edges) run in the
acceptance suite.
"""

from hypercolor import (
    GridParams,
    grid_part_coloring,
    grid_position_coloring,
    grid_transversal,
    is_complete,
    spectrum,
)
from hypercolor.constructions import verify_grid_invariants

k, r = 3, 8
H = grid_transversal(k, r)
print(f"grid k={k}, r={r}:", H)

flags = verify_grid_invariants(H, k, r)
print("structure checks:", flags)

part = grid_part_coloring(k, r)
pos = grid_position_coloring(k, r)
print("part coloring complete at t=k:", is_complete(H, part))
print("position coloring complete at t=r:", is_complete(H, pos))

params = GridParams(k, r)
print("band emptied at this size:", list(params.gap_range()))
# The band only opens up once r clears the quadratic threshold.
big = GridParams(3, 16)
print("band emptied at k=3, r=16:", list(big.gap_range()))

# A truly small instance stays solvable end to end, so we can look at
# the whole spectrum directly; at this scale there is no gap yet.
tiny = grid_transversal(3, 5)
report = spectrum(tiny)
print("\nfull spectrum of the 3x5 grid:", report.feasible)
