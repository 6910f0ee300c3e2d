"""Bitset graphs, vertex sets and degree sequences.

Vertex sets and adjacency rows are plain Python ints used as bitsets, so
there is no fixed word size; ``MAX_ORDER`` is a guard, not a storage limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 1024


class GraphError(ValueError):
    """Raised for structurally invalid graphs or out-of-range arguments."""


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def to_bits(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        if v < 0:
            raise GraphError(f"negative vertex index {v}")
        bits |= 1 << v
    return bits


@dataclass(frozen=True)
class VertexSet:
    """An immutable subset of ``{0, ..., n-1}`` stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} escapes range({self.n})")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> VertexSet:
        return cls(to_bits(vertices), n)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls((1 << n) - 1, n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits, max(self.n, other.n))

    def __le__(self, other: VertexSet) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: VertexSet) -> bool:
        return self <= other and self.bits != other.bits

    def is_full(self) -> bool:
        return self.bits == (1 << self.n) - 1

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, n={self.n})"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbourhood of ``v`` as a bitmask. Instances are
    validated on construction (symmetric, irreflexive, in range) and are
    immutable, so they can be shared freely between workers.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        for v, row in enumerate(self.adj):
            if row < 0 or row >> self.n:
                raise GraphError(f"row {v} has bits outside range({self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside range({n})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # Skips validation; only for rows produced by code that preserves the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row | 1 << v == full for v, row in enumerate(self.adj))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            bits = 0
            for u in iter_bits(row):
                bits |= 1 << perm[u]
            adj[perm[v]] = bits
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, with the kept vertices renumbered in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def with_edits(
        self,
        add: Iterable[tuple[int, int]] = (),
        remove: Iterable[tuple[int, int]] = (),
    ) -> Graph:
        adj = list(self.adj)
        for u, v in remove:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in add:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeSequence:
    """Non-decreasing degree sequence ``d_1 <= ... <= d_n``.

    Indexing with :meth:`at` is 1-based to match the usual notation;
    ``d`` itself is an ordinary 0-based tuple.
    """

    d: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.d)
        if any(a > b for a, b in zip(self.d, self.d[1:])):
            raise GraphError(f"degree sequence {self.d} is not sorted")
        if any(x < 0 or x > n - 1 for x in self.d):
            raise GraphError(f"degree sequence {self.d} has entries outside 0..{n - 1}")

    @classmethod
    def of(cls, values: Iterable[int]) -> DegreeSequence:
        return cls(tuple(sorted(int(x) for x in values)))

    @classmethod
    def parse(cls, text: str) -> DegreeSequence:
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls.of(int(p) for p in parts)
        except ValueError as exc:
            raise GraphError(f"cannot parse degree sequence {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.d)

    def at(self, i: int) -> int:
        return self.d[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.d)

    def __len__(self) -> int:
        return len(self.d)

    def __str__(self) -> str:
        return ",".join(map(str, self.d))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence.of(g.degrees())


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their lowest vertex."""
    remaining = g.full_mask
    out = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        out.append(VertexSet(comp, g.n))
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_clique(g: Graph, bits: int) -> bool:
    return all((g.adj[v] | 1 << v) & bits == bits for v in iter_bits(bits))
