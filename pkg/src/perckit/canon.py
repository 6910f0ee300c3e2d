"""Canonical labelling and isomorph-free enumeration of small graphs.

The canonical labelling is a plain individualisation-refinement search:
colour refinement to an equitable ordered partition, branch on the first
non-singleton cell, keep the leaf whose relabelled adjacency is largest.
Two prunings keep symmetric graphs cheap: vertices that are twins of an
already explored sibling are skipped, and automorphisms found from equal
leaves prune siblings in the same orbit.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, iter_bits
from .graph6 import parse_graph6, write_graph6

CANON_MAX_ORDER = 12
ENUM_MAX_ORDER = 9

# Non-isomorphic simple graphs on n vertices (OEIS A000088), n = 0..9.
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of bitmask cells) until equitable.

    Cells are split by neighbour count into a splitter cell; the pieces keep
    the position of the parent and are ordered by that count, so the result
    depends only on the graph and the input partition, never on labels.
    """
    cells = list(cells)
    k = 0
    while k < len(cells):
        splitter = cells[k]
        changed = False
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(cell):
                c = (adj[v] & splitter).bit_count()
                groups[c] = groups.get(c, 0) | 1 << v
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                out.extend(groups[c] for c in sorted(groups))
        if changed:
            cells = out
            k = 0
        else:
            k += 1
    return cells


def _certificate(adj: tuple[int, ...], order: list[int]) -> int:
    # Upper triangle in graph6 bit order, first bit most significant.
    cert = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | (row >> order[i] & 1)
    return cert


def _orbit_rep(parent: dict[int, int], v: int) -> int:
    while parent.get(v, v) != v:
        v = parent[v]
    return v


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``perm`` with ``g.relabel(perm)`` canonical for the isomorphism class."""
    n = g.n
    if n > CANON_MAX_ORDER:
        raise GraphError(f"canonical labelling is limited to n <= {CANON_MAX_ORDER}, got {n}")
    if n == 0:
        return []
    adj = g.adj
    best_cert = -1
    best_order: list[int] = []
    autos: list[list[int]] = []

    def search(cells: list[int], path: list[int]) -> None:
        nonlocal best_cert, best_order
        target = next((c for c in cells if c & (c - 1)), 0)
        if not target:
            order = [c.bit_length() - 1 for c in cells]
            cert = _certificate(adj, order)
            if cert > best_cert:
                best_cert, best_order = cert, order
            elif cert == best_cert:
                gamma = [0] * n
                for a, b in zip(order, best_order):
                    gamma[a] = b
                autos.append(gamma)
            return
        idx = cells.index(target)
        tried: list[int] = []
        for v in iter_bits(target):
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            if tried and _same_orbit(v, tried, path, autos):
                continue
            tried.append(v)
            split = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1 :]
            search(_refine(adj, split), path + [v])

    search(_refine(adj, [(1 << n) - 1]), [])
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return perm


def _same_orbit(v: int, tried: list[int], path: list[int], autos: list[list[int]]) -> bool:
    """Is ``v`` in the orbit of a tried vertex under automorphisms fixing ``path``?"""
    usable = [a for a in autos if all(a[w] == w for w in path)]
    if not usable:
        return False
    parent: dict[int, int] = {}
    for a in usable:
        for x, y in enumerate(a):
            rx, ry = _orbit_rep(parent, x), _orbit_rep(parent, y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    rv = _orbit_rep(parent, v)
    return any(_orbit_rep(parent, u) == rv for u in tried)


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class key: the graph6 encoding of the canonically labelled graph."""
    if g.n == 0:
        return b""
    return write_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and sorted(g.degrees()) == sorted(h.degrees()) and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    """Canonical representatives on ``n`` vertices, in discovery order.

    Each graph on n vertices arises from a graph on n-1 vertices by adding a
    vertex of minimum degree, so only children whose new vertex has minimum
    degree are kept; survivors are deduplicated by canonical form.
    """
    if n == 0:
        return (Graph.empty(0),)
    if n == 1:
        return (Graph.empty(1),)
    seen: dict[bytes, Graph] = {}
    new_bit = 1 << (n - 1)
    for parent in _level(n - 1):
        degs = parent.degrees()
        for subset in range(1 << (n - 1)):
            k = subset.bit_count()
            if any(k > d + (subset >> v & 1) for v, d in enumerate(degs)):
                continue
            adj = tuple(row | new_bit if subset >> v & 1 else row for v, row in enumerate(parent.adj)) + (subset,)
            child = Graph._trusted(n, adj)
            key = canonical_form(child)
            if key not in seen:
                seen[key] = parse_graph6(key.decode("ascii"))
    return tuple(seen.values())


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """Yield one canonically labelled representative per isomorphism class on ``n`` vertices."""
    if not 0 <= n <= ENUM_MAX_ORDER:
        raise GraphError(f"built-in enumeration supports 0 <= n <= {ENUM_MAX_ORDER}, got {n}")
    yield from _level(n)


def all_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from enumerate_graphs(n)
