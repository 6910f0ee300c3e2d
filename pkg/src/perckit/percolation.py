"""r-neighbour bootstrap percolation and minimum contagious sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, VertexSet, iter_bits, to_bits

EXACT_MAX_ORDER = 40


@dataclass(frozen=True)
class PercolationTrace:
    """Active sets A_0 ⊆ A_1 ⊆ ... ⊆ A_t; the last entry is the closure."""

    rounds: tuple[VertexSet, ...]
    r: int

    @property
    def closure(self) -> VertexSet:
        return self.rounds[-1]

    @property
    def steps(self) -> int:
        return len(self.rounds) - 1

    def to_json(self) -> list[list[int]]:
        return [s.to_list() for s in self.rounds]


@dataclass(frozen=True)
class MinContagiousResult:
    m: int
    witness: VertexSet
    exact: bool


def _seed_bits(g: Graph, seed: VertexSet | Iterable[int] | int) -> int:
    if isinstance(seed, VertexSet):
        bits = seed.bits
    elif isinstance(seed, int):
        bits = seed
    else:
        bits = to_bits(seed)
    if bits < 0 or bits >> g.n:
        raise GraphError(f"seed is not a subset of range({g.n})")
    return bits


def _check_r(r: int) -> None:
    if r < 1:
        raise GraphError(f"threshold r must be at least 1, got {r}")


def closure_bits(adj: tuple[int, ...], full: int, active: int, r: int) -> int:
    """Fixpoint of the synchronous r-neighbour rule starting from ``active``."""
    while True:
        new = 0
        dormant = full & ~active
        while dormant:
            low = dormant & -dormant
            dormant ^= low
            if (adj[low.bit_length() - 1] & active).bit_count() >= r:
                new |= low
        if not new:
            return active
        active |= new


def closure(g: Graph, seed: VertexSet | Iterable[int] | int, r: int) -> VertexSet:
    _check_r(r)
    return VertexSet(closure_bits(g.adj, g.full_mask, _seed_bits(g, seed), r), g.n)


def percolate(g: Graph, seed: VertexSet | Iterable[int] | int, r: int) -> PercolationTrace:
    """Run the process round by round, recording every intermediate active set."""
    _check_r(r)
    active = _seed_bits(g, seed)
    full = g.full_mask
    rounds = [VertexSet(active, g.n)]
    while True:
        new = 0
        for v in iter_bits(full & ~active):
            if (g.adj[v] & active).bit_count() >= r:
                new |= 1 << v
        if not new:
            break
        active |= new
        rounds.append(VertexSet(active, g.n))
    return PercolationTrace(tuple(rounds), r)


def is_contagious(g: Graph, seed: VertexSet | Iterable[int] | int, r: int) -> bool:
    _check_r(r)
    full = g.full_mask
    return closure_bits(g.adj, full, _seed_bits(g, seed), r) == full


def _search_size(adj: tuple[int, ...], n: int, r: int, k: int) -> int | None:
    """Least-valued k-subset bitmask that is r-contagious, or None.

    Seeds are chosen from the highest element down, each level scanning
    upwards, so complete sets are visited in increasing bitmask order. A
    vertex already inside the closure of the partial seed is never added:
    such a set cannot be a minimum contagious set.
    """
    full = (1 << n) - 1

    def rec(remaining: int, upper: int, seed: int, closed: int) -> int | None:
        for v in range(remaining - 1, upper):
            bit = 1 << v
            if closed & bit:
                continue
            s = seed | bit
            c = closure_bits(adj, full, closed | bit, r)
            if remaining == 1:
                if c == full:
                    return s
            else:
                found = rec(remaining - 1, v, s, c)
                if found is not None:
                    return found
        return None

    return rec(k, n, 0, 0)


def min_contagious(g: Graph, r: int) -> MinContagiousResult:
    """Exact m(G, r) with the least-bitmask optimal seed as witness."""
    _check_r(r)
    n = g.n
    if n > EXACT_MAX_ORDER:
        raise GraphError(
            f"exact search is limited to n <= {EXACT_MAX_ORDER}; use greedy_upper_bound for n={n}"
        )
    if n == 0:
        return MinContagiousResult(0, VertexSet(0, 0), True)
    for k in range(min(r, n), n + 1):
        found = _search_size(g.adj, n, r, k)
        if found is not None:
            return MinContagiousResult(k, VertexSet(found, n), True)
    raise AssertionError("the full vertex set is always contagious")


def has_contagious_set_of_size(g: Graph, r: int, k: int) -> VertexSet | None:
    """Least-bitmask r-contagious set of exactly ``k`` vertices, if one exists."""
    _check_r(r)
    if k > g.n:
        return None
    if k == g.n:
        return VertexSet.full(g.n)
    found = _search_size(g.adj, g.n, r, k)
    return None if found is None else VertexSet(found, g.n)


def m2_witness_pair(g: Graph) -> tuple[int, int] | None:
    """A pair whose 2-closure is everything, trying high degree sums first."""
    n = g.n
    if n < 2:
        raise GraphError("m2_witness_pair needs at least two vertices")
    degs = g.degrees()
    pairs = sorted(combinations(range(n), 2), key=lambda p: (-(degs[p[0]] + degs[p[1]]), p))
    full = g.full_mask
    adj = g.adj
    for u, v in pairs:
        if closure_bits(adj, full, 1 << u | 1 << v, 2) == full:
            return u, v
    return None


def m_equals_two(g: Graph) -> bool:
    """m(G, 2) == 2; false for graphs on fewer than two vertices."""
    return g.n >= 2 and m2_witness_pair(g) is not None


def greedy_upper_bound(g: Graph, r: int) -> VertexSet:
    """Contagious set built by repeatedly adding the vertex with the largest closure gain."""
    _check_r(r)
    full = g.full_mask
    seed = 0
    closed = closure_bits(g.adj, full, 0, r)
    while closed != full:
        best_v, best_size = -1, -1
        for v in iter_bits(full & ~closed):
            size = closure_bits(g.adj, full, closed | 1 << v, r).bit_count()
            if size > best_size:
                best_v, best_size = v, size
        seed |= 1 << best_v
        closed = closure_bits(g.adj, full, closed | 1 << best_v, r)
    return VertexSet(seed, g.n)


def maximal_infection(g: Graph, r: int = 2) -> tuple[VertexSet, tuple[int, int]]:
    """Largest closure reachable from two seeds, with the first seed pair attaining it."""
    if r != 2:
        raise GraphError("maximal_infection is defined for r = 2")
    if g.n < 2:
        raise GraphError("maximal_infection needs at least two vertices")
    full = g.full_mask
    best, best_size, best_pair = 0, -1, (0, 1)
    for u, v in combinations(range(g.n), 2):
        c = closure_bits(g.adj, full, 1 << u | 1 << v, 2)
        if c.bit_count() > best_size:
            best, best_size, best_pair = c, c.bit_count(), (u, v)
            if c == full:
                break
    return VertexSet(best, g.n), best_pair
