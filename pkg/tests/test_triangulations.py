import itertools
import random

import networkx as nx
import pytest

from hypercolor import brute_force_spectrum, is_proper, spectrum
from hypercolor.triangulations import (
    Embedding,
    EmbeddingError,
    UnflippableEdgeError,
    embedding_index,
    enumerate_by_insertion,
    enumerate_triangulations,
    face_hypergraph,
    find_gap_face_hypergraphs,
    is_eulerian,
    octahedron,
    parse_embedding,
    serialize_embedding,
    stacked_triangulation,
    tetrahedron,
    three_coloring,
)


class TestEmbeddingBasics:
    def test_tetrahedron(self):
        e = tetrahedron()
        e.validate()
        assert (e.n, e.m) == (4, 6)
        assert len(e.faces()) == 4
        assert all(len(f) == 3 for f in e.faces())
        assert e.is_triangulation

    def test_octahedron(self):
        e = octahedron()
        e.validate()
        assert (e.n, e.m) == (6, 12)
        assert len(e.faces()) == 8
        assert is_eulerian(e)
        assert sorted(e.degrees()) == [4] * 6

    def test_validation_catches_asymmetry(self):
        with pytest.raises(EmbeddingError):
            Embedding(((1,), (0,), (0,)))

    def test_validation_catches_higher_genus(self):
        # K5 is not planar: no rotation system traces to 2 - n + m faces
        rot = [tuple(w for w in range(5) if w != v) for v in range(5)]
        with pytest.raises(EmbeddingError):
            Embedding(rot)

    def test_validation_catches_disconnected(self):
        with pytest.raises(EmbeddingError):
            Embedding(((1,), (0,), (3,), (2,)))

    def test_euler_relation_everywhere(self):
        for e in enumerate_triangulations(7):
            assert len(e.faces()) - e.m + e.n == 2


class TestParseSerialize:
    def test_roundtrip(self):
        e = octahedron()
        assert parse_embedding(serialize_embedding(e)) == e

    def test_comments_and_blank_lines(self):
        text = "# a comment\n\n0: 1 2 3\n1: 0 3 2  # inline\n2: 0 1 3\n3: 0 2 1\n"
        assert parse_embedding(text) == tetrahedron()

    @pytest.mark.parametrize("bad", [
        "",
        "0: 1\n",
        "0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n",
        "junk\n",
        "0: 1 2 3\n0: 1 2 3\n1: 0 3 2\n2: 0 1 3\n3: 0 2 1\n",
    ])
    def test_bad_documents(self, bad):
        with pytest.raises(EmbeddingError):
            parse_embedding(bad)


class TestFlip:
    def test_k4_edges_unflippable(self):
        # every flip diagonal in K4 already exists
        e = tetrahedron()
        for u, v in e.edges():
            with pytest.raises(UnflippableEdgeError):
                e.flip(u, v)

    def test_flip_is_involution_up_to_isomorphism(self):
        e = stacked_triangulation(7)
        flips = 0
        for u, v in e.edges():
            try:
                f = e.flip(u, v)
            except UnflippableEdgeError:
                continue
            flips += 1
            f.validate()
            assert f.is_triangulation
            new = set(f.edges()) - set(e.edges())
            assert len(new) == 1
            x, y = new.pop()
            g = f.flip(x, y)
            assert g.canonical_form() == e.canonical_form()
        assert flips > 0

    def test_nonedge_rejected(self):
        e = octahedron()
        with pytest.raises(EmbeddingError):
            e.flip(0, 5)


class TestCanonicalForm:
    def test_invariance(self):
        rng = random.Random(11)
        for e in enumerate_triangulations(7):
            base = e.canonical_form()
            for _ in range(6):
                perm = list(range(e.n))
                rng.shuffle(perm)
                r = e.relabel(perm)
                if rng.random() < 0.5:
                    r = r.mirror()
                assert r.canonical_form() == base

    def test_separates_the_two_hexagonal_classes(self):
        a, b = enumerate_triangulations(6)
        assert a.canonical_form() != b.canonical_form()


class TestEnumeration:
    def test_counts_against_brute_force(self):
        # oracle: all 3n-6 edge subsets of K_n that form a planar graph,
        # counted up to graph isomorphism (maximal planar graphs have a
        # unique embedding up to reflection, so classes coincide)
        for n in (4, 5, 6):
            pool = list(itertools.combinations(range(n), 2))
            reps = []
            for keep in itertools.combinations(pool, 3 * n - 6):
                g = nx.Graph(keep)
                if g.number_of_nodes() != n or not nx.is_connected(g):
                    continue
                if not nx.check_planarity(g)[0]:
                    continue
                if not any(nx.is_isomorphic(g, h) for h in reps):
                    reps.append(g)
            assert len(enumerate_triangulations(n)) == len(reps)

    def test_known_counts(self):
        # cross-checked by the insertion generator below and the n<=6
        # brute force above
        got = [len(enumerate_triangulations(n)) for n in range(4, 10)]
        assert got == [1, 1, 2, 5, 14, 50]

    def test_generators_agree(self):
        for n in (8, 9):
            a = {e.canonical_form() for e in enumerate_triangulations(n)}
            b = {e.canonical_form() for e in enumerate_by_insertion(n)}
            assert a == b

    def test_deterministic_order(self):
        a = [e.rotation for e in enumerate_triangulations(8)]
        b = [e.rotation for e in enumerate_triangulations(8)]
        assert a == b
        forms = [e.canonical_form() for e in enumerate_triangulations(8)]
        assert forms == sorted(forms)

    def test_scale_guards(self):
        with pytest.raises(ValueError):
            enumerate_triangulations(3)
        with pytest.raises(ValueError):
            enumerate_triangulations(14)

    def test_index_rows(self):
        rows = embedding_index(enumerate_triangulations(6))
        assert len(rows) == 2
        assert {r["m"] for r in rows} == {12}
        assert any(r["eulerian"] for r in rows)  # the octahedron class
        assert rows[0]["degrees"] == sorted(rows[0]["degrees"])


class TestColoring:
    def test_three_coloring_octahedron(self):
        e = octahedron()
        col = three_coloring(e)
        assert col.t == 3
        # classes are the three antipodal pairs
        assert sorted(len(c) for c in col.classes()) == [2, 2, 2]
        assert is_proper(face_hypergraph(e), col)

    def test_three_coloring_rejects_odd_degrees(self):
        with pytest.raises(EmbeddingError):
            three_coloring(stacked_triangulation(5))

    def test_eulerian_iff_three_colorable(self):
        # both directions, over every class on up to 8 vertices
        from hypercolor.solver import exists_proper
        from hypercolor.core import Hypergraph
        for n in range(4, 9):
            for e in enumerate_triangulations(n):
                G = Hypergraph(e.n, 2, e.edges())
                colorable = exists_proper(G, 3).status == "found"
                assert colorable == is_eulerian(e)


class TestFaceHypergraph:
    def test_octahedron(self):
        H = face_hypergraph(octahedron())
        assert (H.n, H.k, H.m) == (6, 3, 8)
        rep = spectrum(H)
        assert rep.feasible == (3,)
        assert brute_force_spectrum(H) == {3}

    def test_same_vertex_set(self):
        e = stacked_triangulation(6)
        H = face_hypergraph(e)
        assert H.n == e.n
        assert H.m == len(e.faces())


class TestFindGap:
    def test_no_hits_below_twelve(self):
        for n in (6, 8, 10):
            assert find_gap_face_hypergraphs(n) == []

    def test_octahedron_not_a_hit(self):
        hits = find_gap_face_hypergraphs(6)
        assert hits == []
