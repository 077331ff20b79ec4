"""Data model for k-uniform hypergraphs and their colorings.

Vertices are the integers 0..n-1.  Edges are k-subsets of vertices, stored
as a read-only (m, k) numpy array whose rows are sorted ascending and
ordered lexicographically, so equal hypergraphs have identical storage and
serialize to identical bytes.  The array representation is what lets the
large constructed families (tens of millions of edges) stay workable in a
few hundred MB; every predicate below streams over edge chunks instead of
materializing per-edge Python objects.

Degenerate-instance conventions, used consistently across the package:

* an edgeless hypergraph has no complete coloring for any t (its
  achromatic number is 0), even though the coverage condition would be
  vacuously true for t < k;
* the chromatic number of an edgeless hypergraph is 1 when n >= 1 and 0
  when n = 0;
* a proper coloring of an edgeless hypergraph is any assignment, so
  ``is_proper`` is vacuously true there.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

# Rows per chunk for streaming predicates.  ~2M rows * k columns keeps
# transient buffers well under 100 MB for k <= 8.
_CHUNK_ROWS = 2_000_000


class HypergraphError(ValueError):
    """Base class for invalid hypergraph data."""


class DocumentError(HypergraphError):
    """Malformed document: not an object, missing/mistyped fields, bad k or n."""


class UniformityError(HypergraphError):
    """An edge has the wrong number of vertices or repeats a vertex."""


class SimplicityError(HypergraphError):
    """The same edge appears more than once."""


class VertexRangeError(HypergraphError):
    """A vertex id is negative or >= n."""


def _dtype_for(n: int) -> np.dtype:
    # smallest signed type that can hold any id; signed so that
    # intermediate arithmetic in callers cannot silently wrap
    if n <= np.iinfo(np.int16).max:
        return np.dtype(np.int16)
    if n <= np.iinfo(np.int32).max:
        return np.dtype(np.int32)
    return np.dtype(np.int64)


class Hypergraph:
    """Simple k-uniform hypergraph on vertices 0..n-1.

    Parameters
    ----------
    n : vertex count, >= 0.
    k : edge size, >= 2.
    edges : iterable of k-element vertex collections, or an (m, k) integer
        array.  Vertex order inside an edge does not matter.
    dedup : if true, silently drop repeated edges instead of raising
        :class:`SimplicityError`.  Generators that can emit the same edge
        twice pass this; parsers of external documents do not.
    """

    __slots__ = ("n", "k", "edges", "_tuples", "_hash")

    n: int
    k: int
    edges: np.ndarray

    def __init__(self, n: int, k: int,
                 edges: Iterable[Sequence[int]] | np.ndarray,
                 *, dedup: bool = False):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise DocumentError(f"vertex count must be a non-negative int, got {n!r}")
        if not isinstance(k, int) or isinstance(k, bool) or k < 2:
            raise DocumentError(f"edge size must be an int >= 2, got {k!r}")
        arr = self._coerce(n, k, edges)
        arr = self._canonicalize(n, k, arr, dedup)
        arr.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "edges", arr)
        object.__setattr__(self, "_tuples", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    @staticmethod
    def _coerce(n: int, k: int, edges) -> np.ndarray:
        if isinstance(edges, np.ndarray):
            if edges.ndim != 2 or (edges.shape[0] > 0 and edges.shape[1] != k):
                raise UniformityError(
                    f"edge array must have shape (m, {k}), got {edges.shape}")
            if not np.issubdtype(edges.dtype, np.integer):
                raise DocumentError("edge array must be integral")
            return edges.astype(_dtype_for(n), copy=True).reshape(-1, k)
        rows = []
        for e in edges:
            row = [int(v) for v in e]
            if len(row) != k:
                raise UniformityError(
                    f"edge {row} has {len(row)} vertices, expected {k}")
            rows.append(row)
        if not rows:
            return np.empty((0, k), dtype=_dtype_for(n))
        return np.array(rows, dtype=_dtype_for(n))

    @staticmethod
    def _canonicalize(n: int, k: int, arr: np.ndarray, dedup: bool) -> np.ndarray:
        m = arr.shape[0]
        if m == 0:
            return arr
        lo = int(arr.min())
        hi = int(arr.max())
        if lo < 0 or hi >= n:
            bad = lo if lo < 0 else hi
            raise VertexRangeError(f"vertex id {bad} out of range for n={n}")
        arr = np.sort(arr, axis=1)
        if np.any(np.diff(arr, axis=1) == 0):
            i = int(np.nonzero(np.any(np.diff(arr, axis=1) == 0, axis=1))[0][0])
            raise UniformityError(f"edge {arr[i].tolist()} repeats a vertex")
        # lexicographic row order; skip the sort when rows already comply
        # (the bulk generators emit in order, and lexsort on 30M rows is slow)
        if m > 1:
            neq = arr[1:] != arr[:-1]
            first = np.where(neq.any(axis=1), neq.argmax(axis=1), k - 1)
            take = np.arange(m - 1)
            cmp = arr[1:][take, first].astype(np.int64) - arr[:-1][take, first].astype(np.int64)
            sorted_ok = bool((cmp > 0).all())
            has_dup = bool((cmp == 0).any())
            if not sorted_ok:
                order = np.lexsort(arr.T[::-1])
                arr = arr[order]
                neq = arr[1:] != arr[:-1]
                has_dup = bool((~neq.any(axis=1)).any())
            if has_dup:
                if not dedup:
                    neq2 = arr[1:] != arr[:-1]
                    i = int(np.nonzero(~neq2.any(axis=1))[0][0])
                    raise SimplicityError(f"duplicate edge {arr[i].tolist()}")
                keep = np.ones(arr.shape[0], dtype=bool)
                keep[1:] = (arr[1:] != arr[:-1]).any(axis=1)
                arr = arr[keep]
        return np.ascontiguousarray(arr)

    # -- basic accessors -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return int(self.edges.shape[0])

    def edge_tuples(self) -> list[tuple[int, ...]]:
        """Edges as sorted tuples, in storage order.  Cached; avoid on huge instances."""
        if self._tuples is None:
            object.__setattr__(self, "_tuples",
                               [tuple(map(int, row)) for row in self.edges])
        return self._tuples

    def degrees(self) -> np.ndarray:
        """Per-vertex edge membership counts, length n."""
        if self.m == 0:
            return np.zeros(self.n, dtype=np.int64)
        return np.bincount(self.edges.ravel(), minlength=self.n)

    def isolated_vertices(self) -> list[int]:
        return [int(v) for v in np.nonzero(self.degrees() == 0)[0]]

    def conflict_masks(self) -> list[int]:
        """Per-vertex bitmask of vertices sharing an edge with it.

        Built once per instance in O(m * k^2); intended for the small
        instances the exact solver operates on, not the bulk families.
        """
        masks = [0] * self.n
        for row in self.edge_tuples():
            for i in range(self.k):
                a = row[i]
                for j in range(i + 1, self.k):
                    b = row[j]
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
        return masks

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n == other.n and self.k == other.k
                and self.edges.shape == other.edges.shape
                and bool(np.array_equal(self.edges, other.edges)))

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(
                self, "_hash",
                hash((self.n, self.k, self.edges.tobytes())))
        return self._hash

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, m={self.m})"


@dataclass(frozen=True)
class Coloring:
    """Assignment of one of t colors (0..t-1) to each vertex 0..n-1."""

    colors: tuple[int, ...]
    t: int

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 0:
            raise ValueError(f"color count must be a non-negative int, got {self.t!r}")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for c in self.colors:
            if c < 0 or c >= self.t:
                raise ValueError(f"color {c} out of range for t={self.t}")

    @property
    def n(self) -> int:
        return len(self.colors)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.colors, dtype=np.int32)

    def class_sizes(self) -> list[int]:
        sizes = [0] * self.t
        for c in self.colors:
            sizes[c] += 1
        return sizes

    def classes(self) -> list[tuple[int, ...]]:
        """Vertices grouped by color, each group ascending."""
        out: list[list[int]] = [[] for _ in range(self.t)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return [tuple(g) for g in out]


def _as_color_array(H: Hypergraph, coloring) -> tuple[np.ndarray, int]:
    """Normalize a Coloring or plain sequence to (array, t)."""
    if isinstance(coloring, Coloring):
        arr = coloring.as_array()
        t = coloring.t
    else:
        arr = np.asarray(list(coloring), dtype=np.int32)
        if arr.size and int(arr.min()) < 0:
            raise ValueError("colors must be non-negative")
        t = int(arr.max()) + 1 if arr.size else 0
    if arr.shape != (H.n,):
        raise ValueError(f"coloring has {arr.shape[0] if arr.ndim else 0} "
                         f"entries, hypergraph has {H.n} vertices")
    return arr, t


def _comb_table(t: int, k: int) -> np.ndarray:
    """table[v, i] = C(v, i+1) for 0 <= v <= t, 0 <= i < k."""
    tab = np.zeros((t + 1, k), dtype=np.int64)
    for v in range(t + 1):
        for i in range(k):
            tab[v, i] = math.comb(v, i + 1)
    return tab


def subset_rank(sorted_colors: Sequence[int]) -> int:
    """Colexicographic rank of a strictly increasing color tuple.

    Bijects the k-subsets of {0..t-1} onto 0..C(t,k)-1 for any t, so
    subsets can be marked in a flat array without knowing t up front.
    """
    return sum(math.comb(c, i + 1) for i, c in enumerate(sorted_colors))


def subset_unrank(rank: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`subset_rank` for a k-subset."""
    out = []
    r = rank
    for i in range(k, 0, -1):
        # largest c with C(c, i) <= r
        c = i - 1
        while math.comb(c + 1, i) <= r:
            c += 1
        out.append(c)
        r -= math.comb(c, i)
    return tuple(reversed(out))


def _chunks(m: int) -> Iterator[slice]:
    for lo in range(0, m, _CHUNK_ROWS):
        yield slice(lo, min(lo + _CHUNK_ROWS, m))


def is_proper(H: Hypergraph, coloring) -> bool:
    """Whether no edge sees the same color twice.

    Accepts a :class:`Coloring` or any length-n int sequence.  Vacuously
    true when the hypergraph has no edges.
    """
    arr, _t = _as_color_array(H, coloring)
    if H.m == 0:
        return True
    k = H.k
    for sl in _chunks(H.m):
        cols = arr[H.edges[sl]]
        if k <= 8:
            # pairwise compare beats a row sort for small k
            for i in range(k):
                for j in range(i + 1, k):
                    if bool((cols[:, i] == cols[:, j]).any()):
                        return False
        else:
            s = np.sort(cols, axis=1)
            if bool((np.diff(s, axis=1) == 0).any()):
                return False
    return True


def is_complete(H: Hypergraph, coloring) -> bool:
    """Whether the coloring is a complete t-coloring.

    Requires: proper, all t color classes nonempty, and every k-subset of
    the t colors realized as the color set of some edge.  Follows the
    module convention that an edgeless hypergraph has no complete
    coloring.
    """
    arr, t = _as_color_array(H, coloring)
    if H.m == 0:
        return False
    k = H.k
    if t < k:
        return False
    total = math.comb(t, k)
    if total > H.m:
        return False  # counting bound: m edges cannot realize more subsets
    if int(np.bincount(arr, minlength=t).min()) == 0:
        return False
    tab = _comb_table(t, k)
    seen = np.zeros(total, dtype=bool)
    offsets = np.arange(k)
    for sl in _chunks(H.m):
        cols = arr[H.edges[sl]]
        s = np.sort(cols, axis=1)
        if bool((np.diff(s, axis=1) == 0).any()):
            return False
        ranks = tab[s, offsets].sum(axis=1)
        seen[ranks] = True
    return bool(seen.all())


def independent_sets(H: Hypergraph, size: int) -> list[tuple[int, ...]]:
    """All vertex sets of the given size with no two members sharing an edge.

    Returned as ascending tuples in lexicographic order.  Backtracks over
    the conflict masks, so usable for moderate n (the search instances),
    not the bulk families.
    """
    if size < 0 or size > H.n:
        raise ValueError(f"size must be in 0..{H.n}, got {size}")
    if size == 0:
        return [()]
    conf = H.conflict_masks()
    out: list[tuple[int, ...]] = []
    chosen: list[int] = []
    n = H.n

    def extend(start: int, forbidden: int):
        need = size - len(chosen)
        for v in range(start, n - need + 1):
            if (forbidden >> v) & 1:
                continue
            chosen.append(v)
            if need == 1:
                out.append(tuple(chosen))
            else:
                extend(v + 1, forbidden | conf[v])
            chosen.pop()

    extend(0, 0)
    return out


def covers_all(H: Hypergraph, vertices: Iterable[int]) -> bool:
    """Whether every edge contains at least one of the given vertices.

    Vacuously true on an edgeless hypergraph.
    """
    sel = np.zeros(H.n, dtype=bool)
    for v in vertices:
        v = int(v)
        if v < 0 or v >= H.n:
            raise VertexRangeError(f"vertex id {v} out of range for n={H.n}")
        sel[v] = True
    for sl in _chunks(H.m):
        if not bool(sel[H.edges[sl]].any(axis=1).all()):
            return False
    return True


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite vertex/edge incidence structure of a hypergraph."""

    n: int
    m: int
    pairs: tuple[tuple[int, int], ...]  # (vertex id, edge index), sorted

    def to_dot(self) -> str:
        """DOT text with vertex nodes v<i> (circles) and edge nodes e<j> (boxes)."""
        lines = ["graph incidence {"]
        for v in range(self.n):
            lines.append(f"  v{v} [shape=circle];")
        for e in range(self.m):
            lines.append(f"  e{e} [shape=box];")
        for v, e in self.pairs:
            lines.append(f"  v{v} -- e{e};")
        lines.append("}")
        return "\n".join(lines) + "\n"


_INCIDENCE_CAP = 100_000


def incidence_graph(H: Hypergraph) -> IncidenceGraph:
    """Vertex-edge incidence graph, with deterministic DOT export.

    Refuses instances beyond ~100k edges; a DOT document at that scale
    serves no reader.
    """
    if H.m > _INCIDENCE_CAP:
        raise ValueError(f"incidence graph capped at {_INCIDENCE_CAP} edges, "
                         f"instance has {H.m}")
    pairs = []
    for j, row in enumerate(H.edge_tuples()):
        for v in row:
            pairs.append((v, j))
    pairs.sort()
    return IncidenceGraph(n=H.n, m=H.m, pairs=tuple(pairs))


# -- serialization -----------------------------------------------------


def hypergraph_to_dict(H: Hypergraph) -> dict:
    return {"k": H.k, "n": H.n,
            "edges": [[int(v) for v in row] for row in H.edges]}


def serialize_hypergraph(H: Hypergraph, *, pretty: bool = False) -> str:
    """Canonical JSON text.  Equal hypergraphs serialize byte-identically."""
    doc = hypergraph_to_dict(H)
    if pretty:
        return json.dumps(doc, indent=2) + "\n"
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _require_int(doc: dict, key: str) -> int:
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, int) or isinstance(val, bool):
        raise DocumentError(f"field {key!r} must be an integer, got {val!r}")
    return val


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the JSON document format.

    Raises :class:`DocumentError` for structural problems,
    :class:`UniformityError` / :class:`VertexRangeError` /
    :class:`SimplicityError` for bad edges.  Duplicate edges in a document
    are an error, never silently merged.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("top level must be a JSON object")
    k = _require_int(doc, "k")
    n = _require_int(doc, "n")
    if "edges" not in doc:
        raise DocumentError("missing field 'edges'")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise DocumentError("field 'edges' must be a list")
    for e in edges:
        if not isinstance(e, list):
            raise DocumentError(f"edge {e!r} must be a list")
        for v in e:
            if not isinstance(v, int) or isinstance(v, bool):
                raise DocumentError(f"vertex id {v!r} must be an integer")
    return Hypergraph(n, k, edges)


# -- spectrum report ---------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    """Outcome of a full spectrum computation.

    ``feasible`` lists every t with a verified complete t-coloring,
    ``unknown`` every t where the solver exhausted its budget without an
    answer.  ``interpolation_holds`` records whether the verified feasible
    values form a contiguous range (the question the counterexample
    families answer in the negative); it is None when unknowns make the
    call ambiguous.
    """

    chi: int
    psi: int
    feasible: tuple[int, ...]
    unknown: tuple[int, ...] = ()
    witnesses: dict = field(default_factory=dict)  # t -> Coloring
    warnings: tuple[str, ...] = ()

    @property
    def interpolation_holds(self) -> bool | None:
        if not self.feasible:
            return None if self.unknown else True
        lo, hi = self.feasible[0], self.feasible[-1]
        gaps = set(range(lo, hi + 1)) - set(self.feasible)
        if gaps - set(self.unknown):
            return False  # some in-range value is verified infeasible
        if not gaps and not self.unknown:
            return True
        return None

    def to_dict(self) -> dict:
        doc = {
            "chi": self.chi,
            "psi": self.psi,
            "feasible": list(self.feasible),
            "unknown": list(self.unknown),
            "interpolation_holds": self.interpolation_holds,
            "witnesses": {str(t): list(w.colors)
                          for t, w in sorted(self.witnesses.items())},
        }
        if self.warnings:
            doc["warnings"] = list(self.warnings)
        return doc

    def to_json(self, *, pretty: bool = False) -> str:
        if pretty:
            return json.dumps(self.to_dict(), indent=2) + "\n"
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"
