"""Shared strategies and independent oracles for the test suite."""

import os
import random
from itertools import combinations, permutations

from hypothesis import strategies as st

from perckit.graph import Graph

EXTERNAL_CORPUS_ENV = "PERCKIT_EXTERNAL_CORPUS"


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_perm(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Try every bijection; independent of the canonical labelling code."""
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    g_edges = {frozenset(e) for e in g.edges()}
    h_edges = {frozenset(e) for e in h.edges()}
    return any({frozenset((p[u], p[v])) for u, v in g_edges} == h_edges for p in permutations(range(g.n)))


def external_corpus_path() -> str | None:
    return os.environ.get(EXTERNAL_CORPUS_ENV) or None


def naive_closure(g: Graph, seed: set[int], r: int, order=None) -> set[int]:
    """Asynchronous one-vertex-at-a-time activation in the given order."""
    active = set(seed)
    order = list(order) if order is not None else list(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in order:
            if v not in active and sum(1 for u in g.neighbors(v) if u in active) >= r:
                active.add(v)
                changed = True
    return active


def naive_m(g: Graph, r: int) -> int:
    """Smallest contagious set by trying every subset, smallest first."""
    for k in range(g.n + 1):
        for seed in combinations(range(g.n), k):
            if len(naive_closure(g, set(seed), r)) == g.n:
                return k
    raise AssertionError


@st.composite
def graphs(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)
