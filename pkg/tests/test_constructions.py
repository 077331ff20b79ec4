import itertools
import json
import math

import pytest

from hypercolor import (
    DocumentError,
    GridParams,
    Hypergraph,
    SplitPattern,
    complete_uniform,
    grid_part_coloring,
    grid_position_coloring,
    grid_transversal,
    is_complete,
    regular15,
    split_lift,
    spectrum,
)
from hypercolor.constructions import verify_grid_invariants


def naive_grid_edges(k, r):
    """Definition-first generator: one loop per edge, no vectorization.

    Vertex (part i, position q) is i*r + q.  An assignment (q_0..q_{k-1})
    of pairwise distinct positions yields an edge when at most one pair
    of parts sits on adjacent positions, or when the positions strictly
    increase.
    """
    edges = set()
    for qs in itertools.product(range(r), repeat=k):
        if len(set(qs)) != k:
            continue
        adjacent = sum(1 for i in range(k) for j in range(i + 1, k)
                       if abs(qs[i] - qs[j]) == 1)
        increasing = all(qs[i] < qs[i + 1] for i in range(k - 1))
        if adjacent <= 1 or increasing:
            edges.add(tuple(sorted(i * r + q for i, q in enumerate(qs))))
    return edges


class TestGridFamily:
    def test_params_validation(self):
        with pytest.raises(ValueError):
            GridParams(2, 6)
        with pytest.raises(ValueError):
            GridParams(3, 2)

    @pytest.mark.parametrize("k,r", [(3, 3), (3, 6), (3, 7), (4, 6)])
    def test_matches_naive_generator(self, k, r):
        H = grid_transversal(k, r)
        assert H.n == k * r
        got = set(H.edge_tuples())
        assert got == naive_grid_edges(k, r)

    def test_invariants_small(self):
        H = grid_transversal(3, 8)
        flags = verify_grid_invariants(H, 3, 8)
        assert flags == {"positions_distinct": True, "parts_distinct": True,
                         "cross_pairs_covered": True}

    def test_part_coloring_complete(self):
        k, r = 3, 7
        H = grid_transversal(k, r)
        col = grid_part_coloring(k, r)
        assert col.t == k
        assert is_complete(H, col)

    def test_position_coloring_complete(self):
        k, r = 3, 7
        H = grid_transversal(k, r)
        col = grid_position_coloring(k, r)
        assert col.t == r
        assert is_complete(H, col)

    def test_gap_range_formula(self):
        # ceil((k-2)r/(k-1)) + k + 1 .. r - 1, for the acceptance sizes
        assert list(GridParams(3, 16).gap_range()) == list(range(12, 16))
        assert list(GridParams(4, 24).gap_range()) == list(range(21, 24))
        assert list(GridParams(5, 34).gap_range()) == list(range(32, 34))
        # degenerate: small r leaves nothing between the two colorings
        assert not GridParams(3, 3).gap_nonempty

    def test_edge_count_closed_form(self):
        # independent count: per strictly-increasing position set, the
        # number of orderings with at most one adjacency, summed directly
        k, r = 3, 9
        H = grid_transversal(k, r)
        total = 0
        for combo in itertools.combinations(range(r), k):
            for perm in itertools.permutations(combo):
                adj = sum(1 for i in range(k) for j in range(i + 1, k)
                          if abs(perm[i] - perm[j]) == 1)
                if adj <= 1 or all(perm[i] < perm[i + 1]
                                   for i in range(k - 1)):
                    total += 1
        assert H.m == total


class TestRegular15:
    def test_structure(self):
        H = regular15()
        assert (H.n, H.k, H.m) == (15, 3, 15)
        assert all(d == 3 for d in H.degrees())
        # linear: no two edges share more than one vertex
        for a, b in itertools.combinations(H.edge_tuples(), 2):
            assert len(set(a) & set(b)) <= 1

    def test_spectrum_values(self):
        rep = spectrum(regular15())
        assert (rep.chi, rep.psi) == (3, 5)
        assert rep.feasible == (3, 5)
        assert rep.interpolation_holds is False


class TestCompleteUniform:
    def test_small(self):
        H = complete_uniform(5, 2)
        assert H.m == 10
        with pytest.raises(ValueError):
            complete_uniform(3, 4)


class TestSplitLift:
    def base_pattern(self):
        # base K4 (3-uniform), split vertices 0 and 1, all lifts zero;
        # each lift row has one entry per split vertex in that edge
        lifts = ((0, 0), (0, 0), (0,), (0,))
        return SplitPattern(4, (0, 1), lifts)

    def test_validation(self):
        with pytest.raises(ValueError):
            SplitPattern(4, (0, 9), ((0,),) * 4)
        with pytest.raises(ValueError):
            # lift row length must match split members per edge
            SplitPattern(4, (0, 1), ((0, 0, 0),) * 4)
        with pytest.raises(ValueError):
            SplitPattern(4, (0,), ((7,),) * 4)

    def test_vertex_layout(self):
        H = split_lift(self.base_pattern())
        # 2 unsplit base vertices keep low ids, 2 split pairs follow
        assert H.n == 6
        assert H.m == 4

    def test_single_split_leaves_other_copy_isolated(self):
        lifts = ((0,), (0,), (0,), ())
        H = split_lift(SplitPattern(4, (0,), lifts))
        assert (H.n, H.m) == (5, 4)
        assert len(H.isolated_vertices()) == 1

    def test_json_roundtrip(self):
        p = self.base_pattern()
        q = SplitPattern.from_json(p.to_json())
        assert q == p
        # k field optional, defaults to 3
        doc = json.loads(p.to_json())
        del doc["k"]
        assert SplitPattern.from_json(json.dumps(doc)) == p
        with pytest.raises(DocumentError):
            SplitPattern.from_json("[]")

    def test_all_zero_lift_of_unsplit_pattern_is_base(self):
        p = SplitPattern(5, (), tuple(() for _ in range(10)))
        H = split_lift(p)
        assert H == complete_uniform(5, 3)

    def test_distinct_lifts_stay_distinct(self):
        # choosing different copies never merges two base edges
        import random
        rng = random.Random(5)
        split = (0, 2, 4)
        base = list(itertools.combinations(range(5), 3))
        for _ in range(20):
            lifts = tuple(
                tuple(rng.randint(0, 1)
                      for v in edge if v in split)
                for edge in base)
            H = split_lift(SplitPattern(5, split, lifts))
            assert H.m == 10
            assert H.n == 5 + 3
