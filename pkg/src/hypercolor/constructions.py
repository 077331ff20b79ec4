"""Generators for the hypergraph families with known coloring spectra.

Three families and one primitive:

* ``grid_transversal(k, r)``: the k-part, r-position family whose edges
  are transversals picked by position patterns; it has complete colorings
  at t=k and t=r but provably none in a gap just below r once r is large.
* ``regular15()``: the 3-uniform 3-regular hypergraph on 15 vertices
  whose spectrum is {3, 5}.
* ``complete_uniform(m, k)``: all k-subsets of m vertices.
* ``split_lift(pattern)``: split chosen vertices of a complete k-uniform
  base into two copies and route every base edge through one copy per
  split member.  The split searches explore exactly this space.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .core import Coloring, DocumentError, Hypergraph

# ceiling on r**k position assignments scanned by the grid generator
_GRID_SCAN_CAP = 300_000_000


@dataclass(frozen=True)
class GridParams:
    """Parameters of the grid transversal family.

    k parts with r positions each; vertex id = part * r + position.
    ``gap_range`` is the band of t values with no complete t-coloring
    once the band is nonempty, which needs r >= (k-1)(k+2).
    """

    k: int
    r: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError(f"need k >= 3, got {self.k}")
        if self.r < self.k:
            raise ValueError(f"need r >= k, got r={self.r}, k={self.k}")

    @property
    def n(self) -> int:
        return self.k * self.r

    def gap_range(self) -> range:
        """Color counts t with no complete t-coloring (when nonempty)."""
        lo = -((self.k - 2) * self.r // -(self.k - 1)) + self.k + 1
        return range(lo, self.r)

    @property
    def gap_nonempty(self) -> bool:
        return len(self.gap_range()) > 0


def grid_transversal(k: int, r: int) -> Hypergraph:
    """Build the grid family on k*r vertices.

    An assignment gives part i the position q_i; it yields the edge
    {i*r + q_i}.  The edge set keeps every assignment with all positions
    distinct that either has at most one adjacent position pair
    (|q_i - q_j| = 1) or is strictly increasing.  Distinct assignments
    give distinct edges, so no dedup pass is needed; the generator emits
    rows already in lexicographic order.
    """
    params = GridParams(k, r)
    if r ** k > _GRID_SCAN_CAP:
        raise ValueError(f"r**k = {r ** k} assignments exceed the generator cap")
    offs = (np.arange(k, dtype=np.int32) * r).astype(np.int16)
    rest = np.indices((r,) * (k - 1), dtype=np.int16).reshape(k - 1, -1).T
    pairs = list(combinations(range(k), 2))
    chunks = []
    for q0 in range(r):
        cols = np.empty((rest.shape[0], k), dtype=np.int16)
        cols[:, 0] = q0
        cols[:, 1:] = rest
        distinct = np.ones(cols.shape[0], dtype=bool)
        adjacent = np.zeros(cols.shape[0], dtype=np.int8)
        for i, j in pairs:
            d = cols[:, i].astype(np.int32) - cols[:, j].astype(np.int32)
            distinct &= d != 0
            adjacent += np.abs(d) == 1
        increasing = np.ones(cols.shape[0], dtype=bool)
        for i in range(k - 1):
            increasing &= cols[:, i] < cols[:, i + 1]
        mask = distinct & ((adjacent <= 1) | increasing)
        if mask.any():
            chunks.append(cols[mask] + offs[None, :])
    edges = (np.concatenate(chunks, axis=0) if chunks
             else np.empty((0, k), dtype=np.int16))
    return Hypergraph(params.n, k, edges)


def grid_part_coloring(k: int, r: int) -> Coloring:
    """t=k coloring by part index; complete because every edge is a transversal."""
    GridParams(k, r)
    return Coloring(tuple(v // r for v in range(k * r)), k)


def grid_position_coloring(k: int, r: int) -> Coloring:
    """t=r coloring by position index; complete because every position
    k-subset appears as an increasing assignment."""
    GridParams(k, r)
    return Coloring(tuple(v % r for v in range(k * r)), r)


def verify_grid_invariants(H: Hypergraph, k: int, r: int) -> dict[str, bool]:
    """Exhaustive structural checks of a grid instance.

    positions_distinct: no edge has two vertices at the same position.
    parts_distinct: every edge has exactly one vertex per part.
    cross_pairs_covered: a vertex pair is co-edged iff it differs in both
    part and position (covering direction meaningful for r >= (k-1)(k+2)).
    All three stream over the full edge array.
    """
    n = k * r
    pairs = list(combinations(range(k), 2))
    positions_distinct = True
    parts_distinct = True
    seen = np.zeros((n, n), dtype=bool)
    step = 2_000_000
    for lo in range(0, H.m, step):
        E = H.edges[lo:lo + step]
        pos = E % r
        part = E // r
        for i, j in pairs:
            if bool((pos[:, i] == pos[:, j]).any()):
                positions_distinct = False
        if not bool((part == np.arange(k, dtype=E.dtype)[None, :]).all()):
            parts_distinct = False
        flat = E.astype(np.int64)
        for i, j in pairs:
            seen[flat[:, i], flat[:, j]] = True
    ids = np.arange(n)
    pu, qu = ids // r, ids % r
    expected = ((pu[:, None] != pu[None, :]) & (qu[:, None] != qu[None, :])
                & (ids[:, None] < ids[None, :]))
    cross = bool((seen == expected).all())
    return {
        "positions_distinct": positions_distinct,
        "parts_distinct": parts_distinct,
        "cross_pairs_covered": cross,
    }


def regular15() -> Hypergraph:
    """The 3-uniform, 3-regular hypergraph on 15 vertices with spectrum {3,5}.

    Three parts of five vertices; vertex (part i, slot j) has id i*5 + j.
    Edge (i, j) takes part i's vertex at slot j+1 (wrapping) together
    with the slot-j vertex of both other parts.
    """
    edges = []
    for i in range(3):
        for j in range(5):
            edge = [i * 5 + (j + 1) % 5]
            for t in range(3):
                if t != i:
                    edge.append(t * 5 + j)
            edges.append(sorted(edge))
    return Hypergraph(15, 3, edges)


def complete_uniform(m: int, k: int) -> Hypergraph:
    """All C(m, k) k-subsets of {0..m-1} as edges."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if m < k:
        raise ValueError(f"need m >= k, got m={m}, k={k}")
    if math.comb(m, k) > 2_000_000:
        raise ValueError(f"C({m},{k}) edges exceed the generator cap")
    return Hypergraph(m, k, list(combinations(range(m), k)))


@dataclass(frozen=True)
class SplitPattern:
    """Recipe for splitting vertices of a complete k-uniform base.

    split lists the base vertices replaced by two copies.  lifts has one
    row per base edge, base edges in lexicographic order; row j holds a
    0/1 copy choice for each split member of base edge j, members in
    ascending order.  Unsplit vertices keep the low ids (in base order);
    the copies of the p-th split vertex get ids u + 2p and u + 2p + 1
    where u is the number of unsplit vertices.
    """

    base_m: int
    split: tuple[int, ...]
    lifts: tuple[tuple[int, ...], ...]
    k: int = 3

    def __post_init__(self):
        if self.k < 2 or self.base_m < self.k:
            raise ValueError(f"need base_m >= k >= 2, got base_m={self.base_m}, k={self.k}")
        split = tuple(sorted(int(v) for v in self.split))
        if len(set(split)) != len(split):
            raise ValueError("split vertices must be distinct")
        if split and (split[0] < 0 or split[-1] >= self.base_m):
            raise ValueError("split vertex out of range")
        object.__setattr__(self, "split", split)
        lifts = tuple(tuple(int(b) for b in row) for row in self.lifts)
        object.__setattr__(self, "lifts", lifts)
        base = self.base_edges()
        if len(lifts) != len(base):
            raise ValueError(f"expected {len(base)} lift rows, got {len(lifts)}")
        split_set = set(split)
        for row, edge in zip(lifts, base):
            want = sum(1 for v in edge if v in split_set)
            if len(row) != want:
                raise ValueError(f"edge {edge} has {want} split members, "
                                 f"lift row {row} has {len(row)}")
            for b in row:
                if b not in (0, 1):
                    raise ValueError(f"lift choice must be 0 or 1, got {b}")

    def base_edges(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.base_m), self.k))

    def to_dict(self) -> dict:
        return {"base_m": self.base_m, "split": list(self.split),
                "lifts": [list(r) for r in self.lifts], "k": self.k}

    def to_json(self, *, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.to_dict(), indent=2) + "\n"
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SplitPattern":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise DocumentError("pattern document must be a JSON object")
        for key in ("base_m", "split", "lifts"):
            if key not in doc:
                raise DocumentError(f"missing field {key!r}")
        k = doc.get("k", 3)
        if not isinstance(k, int) or isinstance(k, bool):
            raise DocumentError("field 'k' must be an integer")
        try:
            return cls(base_m=doc["base_m"], split=tuple(doc["split"]),
                       lifts=tuple(tuple(r) for r in doc["lifts"]), k=k)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, DocumentError):
                raise
            raise DocumentError(str(exc)) from exc


def split_lift(pattern: SplitPattern) -> Hypergraph:
    """Apply a split pattern to its complete k-uniform base.

    Every base edge becomes one edge through the chosen copies.  Distinct
    base edges always produce distinct edges (the copy ids identify the
    base members), so the result keeps C(base_m, k) edges; dedup stays on
    as a guard.  Unchosen copies may be isolated but still count as
    vertices.
    """
    split_set = set(pattern.split)
    unsplit = [v for v in range(pattern.base_m) if v not in split_set]
    u = len(unsplit)
    low_id = {v: i for i, v in enumerate(unsplit)}
    copy_rank = {v: p for p, v in enumerate(pattern.split)}
    n = u + 2 * len(pattern.split)
    edges = []
    for edge, row in zip(pattern.base_edges(), pattern.lifts):
        out = []
        it = iter(row)
        for v in edge:
            if v in split_set:
                out.append(u + 2 * copy_rank[v] + next(it))
            else:
                out.append(low_id[v])
        edges.append(sorted(out))
    return Hypergraph(n, pattern.k, edges, dedup=True)
