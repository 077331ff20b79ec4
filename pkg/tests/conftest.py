"""Shared helpers: naive reference predicates and random instance generators.

The naive predicates below are deliberately written from the definitions
with itertools, independent of the array code under test, so the two
implementations can be compared on random instances.
"""

import itertools
import os
import random

import pytest

from hypercolor import Hypergraph


def naive_is_proper(H, colors):
    for edge in H.edge_tuples():
        if len({colors[v] for v in edge}) != H.k:
            return False
    return True


def naive_is_complete(H, colors, t):
    if t < H.k and H.m > 0:
        return False
    if H.m == 0:
        return False
    if any(c < 0 or c >= t for c in colors):
        return False
    if len(set(colors)) != t:
        return False
    if not naive_is_proper(H, colors):
        return False
    seen = {tuple(sorted(colors[v] for v in e)) for e in H.edge_tuples()}
    return all(tuple(sorted(s)) in seen
               for s in itertools.combinations(range(t), H.k))


def naive_spectrum(H, t_max):
    """Search every coloring, definition-first. Only for tiny instances."""
    out = set()
    for t in range(1, t_max + 1):
        for colors in itertools.product(range(t), repeat=H.n):
            if naive_is_complete(H, colors, t):
                out.add(t)
                break
    return out


def random_uniform_hypergraph(rng, n, k, m):
    """m distinct random k-edges on n vertices (m capped at what exists)."""
    pool = list(itertools.combinations(range(n), k))
    rng.shuffle(pool)
    return Hypergraph(n, k, pool[:min(m, len(pool))])


@pytest.fixture
def rng():
    return random.Random(20240817)


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HYPERCOLOR_SLOW"):
        return
    skip = pytest.mark.skip(reason="set HYPERCOLOR_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
