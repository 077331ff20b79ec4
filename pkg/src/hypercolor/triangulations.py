"""Combinatorial embeddings of planar triangulations.

An embedding is a rotation system: for each vertex, the cyclic order of
its neighbors.  Faces come from the successor rule (the dart (a, b) is
followed by (b, c) where c follows a in b's rotation), and an embedding
is accepted as spherical when face tracing satisfies Euler's relation.

The module enumerates all isomorphism classes of simple planar
triangulations at desk scale by breadth-first search over diagonal
flips, filters for Eulerian (even-degree, hence 3-colorable) classes,
and extracts face hypergraphs: the 3-uniform hypergraph on the same
vertices with one edge per triangular face.  That pipeline locates the
12-vertex triangulation whose face hypergraph has a complete 6-coloring
but no complete 5-coloring.
"""

from __future__ import annotations

import json
import warnings
from functools import lru_cache

from .core import Coloring, Hypergraph
from .solver import exists_proper, spectrum


class EmbeddingError(ValueError):
    """Invalid rotation system or non-spherical embedding."""


class UnflippableEdgeError(RuntimeError):
    """The requested diagonal flip is refused (would break simplicity)."""


class Embedding:
    """Immutable rotation system on vertices 0..n-1.

    rotation[v] lists v's neighbors in cyclic order.  Validation checks
    symmetry, simplicity, connectivity, and genus 0; internal
    constructors that build valid embeddings by local surgery skip it.
    """

    __slots__ = ("rotation", "_faces", "_canon", "_index")

    def __init__(self, rotation, *, validate: bool = True):
        rot = tuple(tuple(int(w) for w in nbrs) for nbrs in rotation)
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "_faces", None)
        object.__setattr__(self, "_canon", None)
        object.__setattr__(self, "_index", None)
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("Embedding is immutable")

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rotation)

    def _neighbor_index(self):
        if self._index is None:
            object.__setattr__(
                self, "_index",
                [{w: i for i, w in enumerate(r)} for r in self.rotation])
        return self._index

    def validate(self) -> None:
        n = self.n
        if n < 2:
            raise EmbeddingError("embedding needs at least 2 vertices")
        for v, nbrs in enumerate(self.rotation):
            if not nbrs:
                raise EmbeddingError(f"vertex {v} has no neighbors")
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"vertex {v} has a repeated neighbor")
            for w in nbrs:
                if w < 0 or w >= n:
                    raise EmbeddingError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise EmbeddingError(f"vertex {v} has a loop")
                if v not in self.rotation[w]:
                    raise EmbeddingError(f"adjacency {v}-{w} not symmetric")
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.rotation[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise EmbeddingError("embedding is not connected")
        f = len(self.faces())
        if f - self.m + n != 2:
            raise EmbeddingError(
                f"not spherical: {f} faces, {self.m} edges, {n} vertices")

    def faces(self) -> list[tuple[int, ...]]:
        """All face cycles; each directed dart is used exactly once."""
        if self._faces is not None:
            return self._faces
        idx = self._neighbor_index()
        seen = set()
        out = []
        for a in range(self.n):
            for b in self.rotation[a]:
                if (a, b) in seen:
                    continue
                cycle = []
                u, v = a, b
                while (u, v) not in seen:
                    seen.add((u, v))
                    cycle.append(u)
                    nbrs = self.rotation[v]
                    u, v = v, nbrs[(idx[v][u] + 1) % len(nbrs)]
                out.append(tuple(cycle))
        object.__setattr__(self, "_faces", out)
        return out

    @property
    def is_triangulation(self) -> bool:
        return self.n >= 4 and all(len(f) == 3 for f in self.faces())

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n)
                for v in self.rotation[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotation[u]

    def flip(self, u: int, v: int) -> "Embedding":
        """Replace edge uv by the opposite diagonal of its two triangles.

        Refused when the two faces at uv share their third vertex or when
        the diagonal already exists (both would break simplicity).
        """
        idx = self._neighbor_index()
        if v not in idx[u]:
            raise EmbeddingError(f"{u}-{v} is not an edge")
        rot = self.rotation
        dv, du = len(rot[v]), len(rot[u])
        x = rot[v][(idx[v][u] + 1) % dv]   # face (u, v, x)
        y = rot[u][(idx[u][v] + 1) % du]   # face (v, u, y)
        if rot[x][(idx[x][v] + 1) % len(rot[x])] != u or \
           rot[y][(idx[y][u] + 1) % len(rot[y])] != v:
            raise EmbeddingError(f"faces at {u}-{v} are not triangles")
        if x == y:
            raise UnflippableEdgeError(f"faces at {u}-{v} share vertex {x}")
        if y in idx[x]:
            raise UnflippableEdgeError(f"diagonal {x}-{y} already present")

        new = list(rot)
        ru = list(rot[u]); ru.remove(v)
        rv = list(rot[v]); rv.remove(u)
        rx = list(rot[x]); rx.insert(rx.index(v) + 1, y)   # v, y, u
        ry = list(rot[y]); ry.insert(ry.index(u) + 1, x)   # u, x, v
        new[u] = tuple(ru)
        new[v] = tuple(rv)
        new[x] = tuple(rx)
        new[y] = tuple(ry)
        return Embedding(new, validate=False)

    def relabel(self, perm) -> "Embedding":
        """Apply a vertex permutation (perm[v] = new id of v)."""
        new = [()] * self.n
        for v, nbrs in enumerate(self.rotation):
            new[perm[v]] = tuple(perm[w] for w in nbrs)
        return Embedding(new, validate=False)

    def mirror(self) -> "Embedding":
        """Reverse all rotations (orientation flip)."""
        return Embedding(tuple(tuple(reversed(r)) for r in self.rotation),
                         validate=False)

    def _bfs_code(self, u0: int, v0: int, reverse: bool) -> bytes:
        rot = self.rotation
        idx = self._neighbor_index()
        label = [-1] * self.n
        label[u0] = 0
        nxt = 1
        order = [u0]
        start = {u0: v0}
        code = bytearray()
        qi = 0
        while qi < len(order):
            w = order[qi]
            qi += 1
            nbrs = rot[w]
            d = len(nbrs)
            i0 = idx[w][start[w]]
            step = -1 if reverse else 1
            for j in range(d):
                x = nbrs[(i0 + step * j) % d]
                if label[x] < 0:
                    label[x] = nxt
                    nxt += 1
                    order.append(x)
                    start[x] = w
                code.append(label[x])
            code.append(0xFF)
        return bytes(code)

    def canonical_form(self) -> bytes:
        """Byte string invariant under relabeling, re-rooting, and reflection."""
        if self._canon is not None:
            return self._canon
        deg = self.degrees()
        best_pair = min((deg[u], deg[v])
                        for u in range(self.n) for v in self.rotation[u])
        best = None
        for u in range(self.n):
            for v in self.rotation[u]:
                if (deg[u], deg[v]) != best_pair:
                    continue
                for reverse in (False, True):
                    code = self._bfs_code(u, v, reverse)
                    if best is None or code < best:
                        best = code
        result = bytes([self.n]) + best
        object.__setattr__(self, "_canon", result)
        return result

    def __eq__(self, other):
        if not isinstance(other, Embedding):
            return NotImplemented
        return self.rotation == other.rotation

    def __hash__(self):
        return hash(self.rotation)

    def __repr__(self):
        return f"Embedding(n={self.n}, m={self.m})"


def parse_embedding(text: str) -> Embedding:
    """Read the line format "v: n1 n2 ... nd"; '#' starts a comment."""
    rows = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise EmbeddingError(f"expected 'v: neighbors', got {raw!r}")
        head, _, tail = line.partition(":")
        try:
            v = int(head)
            nbrs = tuple(int(t) for t in tail.split())
        except ValueError as exc:
            raise EmbeddingError(f"bad line {raw!r}") from exc
        if v in rows:
            raise EmbeddingError(f"vertex {v} listed twice")
        rows[v] = nbrs
    if not rows:
        raise EmbeddingError("empty embedding document")
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise EmbeddingError("vertex lines must cover 0..n-1")
    return Embedding(tuple(rows[v] for v in range(n)))


def serialize_embedding(e: Embedding) -> str:
    return "".join(f"{v}: {' '.join(map(str, e.rotation[v]))}\n"
                   for v in range(e.n))


def face_hypergraph(e: Embedding) -> Hypergraph:
    """3-uniform hypergraph on the same vertices, one edge per face."""
    if not e.is_triangulation:
        raise EmbeddingError("face hypergraph needs a triangulation")
    rows = [tuple(sorted(f)) for f in e.faces()]
    if len(set(rows)) != len(rows):
        warnings.warn("duplicate face vertex sets merged", stacklevel=2)
    return Hypergraph(e.n, 3, rows, dedup=True)


def is_eulerian(e: Embedding) -> bool:
    return all(d % 2 == 0 for d in e.degrees())


def _graph_hypergraph(e: Embedding) -> Hypergraph:
    return Hypergraph(e.n, 2, e.edges())


def three_coloring(e: Embedding) -> Coloring:
    """Proper 3-coloring of an Eulerian triangulation's graph.

    Such a coloring is also proper for the face hypergraph, since every
    graph edge lies in a face.  Raises for non-Eulerian input, where no
    such coloring exists.
    """
    if not e.is_triangulation:
        raise EmbeddingError("three_coloring needs a triangulation")
    if not is_eulerian(e):
        raise EmbeddingError("triangulation has odd-degree vertices")
    res = exists_proper(_graph_hypergraph(e), 3)
    assert res.status == "found", "even degrees must admit a 3-coloring"
    return res.witness


def tetrahedron() -> Embedding:
    return Embedding(((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1)),
                     validate=False)


def octahedron() -> Embedding:
    return Embedding(((1, 2, 3, 4), (0, 4, 5, 2), (0, 1, 5, 3),
                      (0, 2, 5, 4), (0, 3, 5, 1), (1, 4, 3, 2)),
                     validate=False)


def _insert_vertex(e: Embedding, face: tuple[int, int, int]) -> Embedding:
    """Stack a new vertex inside a triangular face (p, q, r)."""
    p, q, r = face
    a = e.n
    new = [list(nbrs) for nbrs in e.rotation]
    new[p].insert(new[p].index(r) + 1, a)
    new[q].insert(new[q].index(p) + 1, a)
    new[r].insert(new[r].index(q) + 1, a)
    new.append([p, r, q])
    return Embedding(new, validate=False)


def stacked_triangulation(n: int) -> Embedding:
    """K4 plus repeated vertex insertion into the first traced face."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    e = tetrahedron()
    while e.n < n:
        e = _insert_vertex(e, e.faces()[0])
    return e


_ENUM_MAX = 13


def _bfs_closure(seeds) -> list[Embedding]:
    """All triangulation classes reachable from seeds by diagonal flips.

    The seen-set is keyed by canonical form, frontier layers are
    processed in canonical-form order, and the output is sorted by
    canonical form, so enumeration is deterministic.  Every output is
    fully re-validated.
    """
    seen: dict[bytes, Embedding] = {}
    frontier = []
    for e in seeds:
        key = e.canonical_form()
        if key not in seen:
            seen[key] = e
            frontier.append(key)
    while frontier:
        frontier.sort()
        nxt = []
        for key in frontier:
            e = seen[key]
            for u, v in e.edges():
                try:
                    f = e.flip(u, v)
                except UnflippableEdgeError:
                    continue
                ck = f.canonical_form()
                if ck not in seen:
                    seen[ck] = f
                    nxt.append(ck)
        frontier = nxt
    out = [seen[k] for k in sorted(seen)]
    for e in out:
        e.validate()
        if not e.is_triangulation:
            raise EmbeddingError("flip closure produced a non-triangulation")
    return out


@lru_cache(maxsize=16)
def _enumerate_cached(n: int) -> tuple[Embedding, ...]:
    return tuple(_bfs_closure([stacked_triangulation(n)]))


def enumerate_triangulations(n: int) -> list[Embedding]:
    """All isomorphism classes of simple planar triangulations on n vertices.

    Flip-graph BFS from the stacked triangulation with canonical-form
    dedup.  Desk scale only: 4 <= n <= 13.
    """
    if not 4 <= n <= _ENUM_MAX:
        raise ValueError(f"n must be in 4..{_ENUM_MAX}, got {n}")
    return list(_enumerate_cached(n))


def enumerate_by_insertion(n: int) -> list[Embedding]:
    """Second generation method for cross-validation.

    Seeds the flip closure with every vertex insertion into every face
    of every (n-1)-class instead of the single stacked seed.  Agreement
    with :func:`enumerate_triangulations` is the enumeration oracle at
    n beyond brute-force scale.
    """
    if not 5 <= n <= _ENUM_MAX:
        raise ValueError(f"n must be in 5..{_ENUM_MAX}, got {n}")
    seeds = []
    for e in enumerate_triangulations(n - 1):
        for face in e.faces():
            seeds.append(_insert_vertex(e, face))
    return _bfs_closure(seeds)


def find_gap_face_hypergraphs(n: int, *, budget: int | None = None):
    """Eulerian classes whose face hypergraph has complete 6 but not 5.

    Returns (Embedding, SpectrumReport) pairs in enumeration order.  A
    budget-exhausted t=5 or t=6 leaves a class out (its report would not
    verify the gap), consistent with the solver's unknown semantics.
    """
    out = []
    for e in enumerate_triangulations(n):
        if not is_eulerian(e):
            continue
        rep = spectrum(face_hypergraph(e), budget=budget)
        if (6 in rep.feasible and 5 not in rep.feasible
                and 5 not in rep.unknown and 6 not in rep.unknown):
            out.append((e, rep))
    return out


def embedding_index(classes) -> list[dict]:
    """Summary rows (degree sequence, Eulerian flag) for an enumeration."""
    rows = []
    for i, e in enumerate(classes):
        rows.append({
            "index": i,
            "n": e.n,
            "m": e.m,
            "degrees": sorted(e.degrees()),
            "eulerian": is_eulerian(e),
        })
    return rows


def index_json(classes, *, pretty: bool = False) -> str:
    doc = embedding_index(classes)
    if pretty:
        return json.dumps(doc, indent=2) + "\n"
    return json.dumps(doc, separators=(",", ":")) + "\n"
