"""Degree conditions for m(G, 2) = 2 and degree-sequence utilities."""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass
from typing import Sequence

from .graph import DegreeSequence, Graph, GraphError, degree_sequence, iter_bits

INF = math.inf


def sigma2(g: Graph) -> float | int:
    """Minimum degree sum over non-adjacent pairs; ``math.inf`` for complete graphs."""
    if g.n < 2:
        raise GraphError("sigma2 needs at least two vertices")
    degs = g.degrees()
    full = g.full_mask
    best: float | int = INF
    for v in range(g.n):
        non = full & ~g.adj[v] & ~((1 << (v + 1)) - 1)
        for u in iter_bits(non):
            s = degs[u] + degs[v]
            if s < best:
                best = s
    return best


def dirac_fpr(g: Graph, r: int) -> bool:
    """min degree >= (r-1)/r * n, compared exactly."""
    if r < 2:
        raise GraphError("the Dirac-type condition is stated for r >= 2")
    return r * g.min_degree() >= (r - 1) * g.n


def gunderson_threshold(n: int, r: int) -> int:
    if r < 3:
        raise GraphError("Gunderson's conditions are stated for r >= 3")
    return n // 2 + 1 if r == 3 else n // 2 + r - 3


def gunderson_caveat(n: int, r: int) -> str | None:
    """Side condition under which the min-degree threshold is known to suffice, if unmet or unquantified."""
    if r == 3:
        return None if n >= 30 else "requires n >= 30"
    if r < 3:
        raise GraphError("Gunderson's conditions are stated for r >= 3")
    return "requires n sufficiently large (no explicit constant)"


def gunderson(g: Graph, r: int) -> bool:
    """Threshold test only; see :func:`gunderson_caveat` for the order requirement."""
    return g.min_degree() >= gunderson_threshold(g.n, r)


def _check_chvatal(d: DegreeSequence, slack: int) -> bool:
    n = d.n
    i = 1
    while 2 * i < n:
        if not (d.at(i) >= i + 1 or d.at(n - i) >= n - i - slack):
            return False
        i += 1
    return True


def chvatal_condition(d: DegreeSequence) -> bool:
    return _check_chvatal(d, 0)


def weak_chvatal_condition(d: DegreeSequence) -> bool:
    return _check_chvatal(d, 1)


def is_graphic(d: DegreeSequence | Sequence[int]) -> bool:
    """Erdős–Gallai test."""
    seq = sorted(d, reverse=True)
    n = len(seq)
    if any(x < 0 or x > n - 1 for x in seq) or sum(seq) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += seq[k - 1]
        if prefix > k * (k - 1) + sum(min(x, k) for x in seq[k:]):
            return False
    return True


def realize(d: DegreeSequence) -> Graph:
    """Havel–Hakimi realisation on vertices ordered as in ``d``.

    The vertex with the largest residual degree (lowest index on ties) is
    joined to the next-largest residual vertices (lowest index on ties).
    """
    n = d.n
    residual = list(d.d)
    edges = []
    while True:
        v = max(range(n), key=lambda i: (residual[i], -i))
        k = residual[v]
        if k == 0:
            break
        others = sorted((i for i in range(n) if i != v and residual[i] > 0), key=lambda i: (-residual[i], i))
        if len(others) < k:
            raise GraphError(f"degree sequence {d} is not graphic")
        residual[v] = 0
        for u in others[:k]:
            residual[u] -= 1
            edges.append((v, u))
    return Graph.from_edges(n, edges)


def majorizes(s: DegreeSequence, t: DegreeSequence) -> bool:
    if s.n != t.n:
        raise GraphError(f"cannot compare sequences of lengths {s.n} and {t.n}")
    return all(a >= b for a, b in zip(s, t))


def sharpness_sequence(n: int, i: int, weak: bool = False) -> DegreeSequence:
    """(i^i, (n-i-1)^(n-2i), (n-1)^i), or with n-i-2 in the middle block when ``weak``."""
    if not (2 <= i and 2 * i < n):
        raise GraphError(f"need 2 <= i < n/2, got n={n}, i={i}")
    if weak and n % 2:
        raise GraphError("the weak variant needs n even")
    mid = n - i - 2 if weak else n - i - 1
    return DegreeSequence((i,) * i + (mid,) * (n - 2 * i) + (n - 1,) * i)


def random_edge_switch(g: Graph, rng: random.Random, attempts: int | None = None) -> Graph:
    """Degree-preserving randomisation by double edge swaps.

    Each attempt picks two edges ab, cd uniformly and rewires to ac, bd (or
    ad, bc) when that keeps the graph simple; ``10 * |E|`` attempts by default.
    """
    adj = list(g.adj)
    edges = g.edges()
    if len(edges) < 2:
        return g
    if attempts is None:
        attempts = 10 * len(edges)
    for _ in range(attempts):
        i, j = rng.sample(range(len(edges)), 2)
        a, b = edges[i]
        c, d = edges[j]
        if rng.random() < 0.5:
            c, d = d, c
        if len({a, b, c, d}) < 4 or adj[a] >> c & 1 or adj[b] >> d & 1:
            continue
        adj[a] ^= 1 << b | 1 << c
        adj[b] ^= 1 << a | 1 << d
        adj[c] ^= 1 << d | 1 << a
        adj[d] ^= 1 << c | 1 << b
        edges[i] = (a, c)
        edges[j] = (b, d)
    return Graph(g.n, tuple(adj))


@dataclass(frozen=True)
class ConditionReport:
    n: int
    sigma2: float | int | None
    min_degree: int
    ore_n: bool
    ore_n_minus_2: bool
    dirac_fpr: bool | None
    gunderson: bool | None
    gunderson_caveat: str | None
    chvatal: bool
    weak_chvatal: bool
    r: int

    def to_json(self) -> dict:
        out = asdict(self)
        if out["sigma2"] == INF:
            out["sigma2"] = "inf"
        return out


def condition_report(g: Graph, r: int = 2) -> ConditionReport:
    s2 = sigma2(g) if g.n >= 2 else None
    d = degree_sequence(g)
    return ConditionReport(
        n=g.n,
        sigma2=s2,
        min_degree=g.min_degree(),
        ore_n=s2 is not None and s2 >= g.n,
        ore_n_minus_2=s2 is not None and s2 >= g.n - 2,
        dirac_fpr=dirac_fpr(g, r) if r >= 2 else None,
        gunderson=gunderson(g, r) if r >= 3 else None,
        gunderson_caveat=gunderson_caveat(g.n, r) if r >= 3 else None,
        chvatal=chvatal_condition(d),
        weak_chvatal=weak_chvatal_condition(d),
        r=r,
    )


def sequence_report(d: DegreeSequence) -> dict:
    return {
        "sequence": list(d.d),
        "graphic": is_graphic(d),
        "chvatal": chvatal_condition(d),
        "weak_chvatal": weak_chvatal_condition(d),
    }
