"""Shared test helpers: independent oracles kept deliberately separate from
the library code paths they check."""

from itertools import permutations

import pytest

from specgraph import Graph


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Isomorphism by trying every vertex bijection; independent of canonical forms."""
    if g1.order != g2.order:
        return False
    edges1 = set(g1.edges())
    for perm in permutations(range(g2.order)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in g2.edges()}
        if mapped == edges1:
            return True
    return False


def direct_triangle_count(g: Graph) -> int:
    """Triangle count by checking all vertex triples."""
    n = g.order
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
        if g.has_edge(i, j) and g.has_edge(i, k) and g.has_edge(j, k)
    )


@pytest.fixture
def rng():
    import random
    return random.Random(0xC0FFEE)


def random_graph(rng, n: int) -> Graph:
    m = n * (n - 1) // 2
    return Graph(n, rng.getrandbits(m) if m else 0)
