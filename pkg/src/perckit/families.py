"""Standard constructions and the exceptional two-clique families.

A two-clique graph has vertex classes X and Y that each induce a clique.
The surgered variants pick x, x' in X and y, y' in Y, add the cross edges
xy and x'y', and delete xx' and yy' when those are distinct pairs:

    G1: x = x', y = y'      G2: x != x', y != y'      G3: x = x', y != y'

Constructors place X on ``0..a-1`` and Y on ``a..a+b-1`` with x, x' the two
highest X vertices and y, y' the two lowest Y vertices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .canon import CANON_MAX_ORDER, canonical_form, enumerate_graphs
from .conditions import sigma2
from .graph import Graph, GraphError, components, is_clique, iter_bits
from .graph6 import parse_graph6, read_graph6_lines
from .percolation import m_equals_two

CORPUS_ENV = "PERCKIT_X_CORPUS"
FAMILY_KINDS = ("G0", "G1", "G2", "G3")
CLASSIFY_MAX_ORDER = 64

# Smallest (a, b) for which each side keeps a vertex without cross edges.
MIN_SIZES = {"G0": (1, 1), "G1": (2, 2), "G2": (3, 3), "G3": (2, 3)}
# Smallest (a, b) for which the surgery is defined at all.
_SHAPE_SIZES = {"G0": (1, 1), "G1": (1, 1), "G2": (2, 2), "G3": (1, 2)}


def make_empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("order must be non-negative")
    return Graph.empty(n)


def make_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2))


def make_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def make_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union, ``h`` shifted after ``g``."""
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def make_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    shift = g.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << shift
    return Graph(
        g.n + h.n,
        tuple(row | h_mask for row in g.adj) + tuple(row << shift | g_mask for row in h.adj),
    )


def _two_cliques(kind: str, a: int, b: int) -> Graph:
    n = a + b
    g = make_union(make_complete(a), make_complete(b))
    x, y = a - 1, a
    if kind == "G0":
        return g
    if kind == "G1":
        return g.with_edits(add=[(x, y)])
    if kind == "G2":
        x2, y2 = a - 2, a + 1
        return g.with_edits(add=[(x, y), (x2, y2)], remove=[(x, x2), (y, y2)])
    if kind == "G3":
        y2 = a + 1
        return g.with_edits(add=[(x, y), (x, y2)], remove=[(y, y2)])
    raise GraphError(f"unknown family {kind!r} (n={n})")


def _check_sizes(kind: str, a: int, b: int, table: dict[str, tuple[int, int]]) -> None:
    lo_a, lo_b = table[kind]
    if a < lo_a or b < lo_b:
        raise GraphError(f"{kind} needs a >= {lo_a} and b >= {lo_b}, got ({a}, {b})")


def make_family(kind: str, a: int, b: int) -> Graph:
    if kind not in MIN_SIZES:
        raise GraphError(f"unknown family {kind!r}")
    _check_sizes(kind, a, b, MIN_SIZES)
    return _two_cliques(kind, a, b)


def make_g0(a: int, b: int) -> Graph:
    return make_family("G0", a, b)


def make_g1(a: int, b: int) -> Graph:
    return make_family("G1", a, b)


def make_g2(a: int, b: int) -> Graph:
    return make_family("G2", a, b)


def make_g3(a: int, b: int) -> Graph:
    return make_family("G3", a, b)


@dataclass(frozen=True)
class FamilyLabel:
    """Classification result.

    For G0..G3 the witness is the clique bipartition and the surgery
    vertices; for X it is the index into the corpus.
    """

    kind: str | None
    x_set: tuple[int, ...] = ()
    y_set: tuple[int, ...] = ()
    x: int | None = None
    x2: int | None = None
    y: int | None = None
    y2: int | None = None
    corpus_index: int | None = None

    def relabeling(self) -> list[int]:
        """Vertex map sending the classified graph onto the constructor's layout."""
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"no two-clique witness for kind {self.kind!r}")
        if self.kind == "G0":
            order = list(self.x_set) + list(self.y_set)
        else:
            x_tail = [self.x] if self.x == self.x2 else [self.x2, self.x]
            y_head = [self.y] if self.y == self.y2 else [self.y, self.y2]
            order = (
                [v for v in self.x_set if v not in x_tail]
                + x_tail
                + y_head
                + [v for v in self.y_set if v not in y_head]
            )
        perm = [0] * len(order)
        for pos, v in enumerate(order):
            perm[v] = pos
        return perm

    def rebuild(self) -> Graph:
        """Re-apply the witness: the surgered two-clique graph of the recorded sizes."""
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"no two-clique witness for kind {self.kind!r}")
        _check_sizes(self.kind, len(self.x_set), len(self.y_set), _SHAPE_SIZES)
        return _two_cliques(self.kind, len(self.x_set), len(self.y_set))

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind in FAMILY_KINDS:
            out.update(
                x_set=list(self.x_set), y_set=list(self.y_set), x=self.x, x2=self.x2, y=self.y, y2=self.y2,
            )
        elif self.kind == "X":
            out["corpus_index"] = self.corpus_index
        return out


def _split_two_cliques(g: Graph) -> tuple[int, int] | None:
    comps = components(g)
    if len(comps) != 2 or not all(is_clique(g, c.bits) for c in comps):
        return None
    return comps[0].bits, comps[1].bits


def _match_surgery(g: Graph) -> FamilyLabel | None:
    """Undo each candidate surgery and look for two disjoint cliques.

    Candidates are one or two edges taken as the added cross edges; the
    removed internal edges are restored and the remainder must split into
    exactly two cliques with x, x' on one side and y, y' on the other.
    """
    edges = g.edges()
    adj = g.adj
    # G1: a single cross edge.
    for u, v in edges:
        for x, y in ((u, v), (v, u)):
            split = _split_two_cliques(g.with_edits(remove=[(x, y)]))
            if split and split[0] >> x & 1 != split[0] >> y & 1:
                xs, ys = (split[0], split[1]) if split[0] >> x & 1 else (split[1], split[0])
                return _label("G1", xs, ys, x, x, y, y)
    for (p, q), (s, t) in combinations(edges, 2):
        for x, y in ((p, q), (q, p)):
            for x2, y2 in ((s, t), (t, s)):
                if x == x2 and y == y2:
                    continue
                if x == x2 or y == y2:
                    # G3 with the shared endpoint on the X side.
                    if y == y2:
                        continue
                    if adj[y] >> y2 & 1:
                        continue
                    h = g.with_edits(remove=[(x, y), (x, y2)], add=[(y, y2)])
                    kind = "G3"
                else:
                    if x == y2 or y == x2 or adj[x] >> x2 & 1 or adj[y] >> y2 & 1:
                        continue
                    h = g.with_edits(remove=[(x, y), (x2, y2)], add=[(x, x2), (y, y2)])
                    kind = "G2"
                split = _split_two_cliques(h)
                if not split:
                    continue
                xs, ys = (split[0], split[1]) if split[0] >> x & 1 else (split[1], split[0])
                if xs >> x2 & 1 and ys >> y & 1 and ys >> y2 & 1:
                    return _label(kind, xs, ys, x, x2, y, y2)
    return None


def _label(kind: str, xs: int, ys: int, x: int, x2: int, y: int, y2: int) -> FamilyLabel:
    return FamilyLabel(kind, tuple(iter_bits(xs)), tuple(iter_bits(ys)), x, x2, y, y2)


def classify_two_clique(g: Graph) -> FamilyLabel:
    """Structural recognition of G0..G3 only (no corpus lookup)."""
    if g.n > CLASSIFY_MAX_ORDER:
        raise GraphError(f"family recognition is limited to n <= {CLASSIFY_MAX_ORDER}")
    split = _split_two_cliques(g)
    if split:
        return FamilyLabel("G0", tuple(iter_bits(split[0])), tuple(iter_bits(split[1])))
    if g.n >= 3 and len(components(g)) == 1:
        label = _match_surgery(g)
        if label is not None:
            return label
    return FamilyLabel(None)


def classify_family(g: Graph, corpus: XCorpus | None = None) -> FamilyLabel:
    """G0..G3 by structure (families take precedence), then X by corpus lookup."""
    label = classify_two_clique(g)
    if label.kind is not None:
        return label
    if g.n <= CANON_MAX_ORDER:
        corpus = corpus if corpus is not None else load_x_corpus()
        idx = corpus.index_of(g)
        if idx is not None:
            return FamilyLabel("X", corpus_index=idx)
    return FamilyLabel(None)


# ---------------------------------------------------------------- X corpus


@dataclass(frozen=True)
class XEntry:
    order: int
    graph6: str
    form: bytes


@dataclass(frozen=True)
class XCorpus:
    entries: tuple[XEntry, ...]
    provenance: tuple[str, ...] = ()
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        self._index.update({e.form: i for i, e in enumerate(self.entries)})

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[XEntry]:
        return iter(self.entries)

    def graphs(self) -> list[Graph]:
        return [parse_graph6(e.graph6) for e in self.entries]

    def index_of(self, g: Graph) -> int | None:
        if g.n > CANON_MAX_ORDER or g.n == 0:
            return None
        return self._index.get(canonical_form(g))

    def orders(self) -> list[int]:
        return [e.order for e in self.entries]

    def dumps(self) -> str:
        lines = [f"# {p}" for p in self.provenance]
        lines += [e.graph6 for e in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_graphs(cls, graphs: Iterable[Graph], provenance: Iterable[str] = ()) -> XCorpus:
        by_form: dict[bytes, XEntry] = {}
        for g in graphs:
            form = canonical_form(g)
            by_form.setdefault(form, XEntry(g.n, form.decode("ascii"), form))
        entries = sorted(by_form.values(), key=lambda e: (e.order, e.graph6))
        return cls(tuple(entries), tuple(provenance))

    @classmethod
    def loads(cls, text: str) -> XCorpus:
        lines = text.splitlines()
        provenance = [ln[1:].strip() for ln in lines if ln.startswith("#")]
        return cls.from_graphs(read_graph6_lines(lines), provenance)


def default_corpus_path() -> Path:
    override = os.environ.get(CORPUS_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("perckit") / "data" / "x_corpus.g6"))


@lru_cache(maxsize=8)
def _load_corpus(path: str) -> XCorpus:
    return XCorpus.loads(Path(path).read_text(encoding="utf-8"))


def load_x_corpus(path: str | Path | None = None) -> XCorpus:
    return _load_corpus(str(path if path is not None else default_corpus_path()))


def is_x_candidate(g: Graph) -> bool:
    """sigma2 >= n - 2, m(G, 2) > 2 and not a two-clique family member."""
    if g.n < 3:
        return False
    if sigma2(g) < g.n - 2:
        return False
    if m_equals_two(g):
        return False
    return classify_two_clique(g).kind is None


def derive_x(max_n: int, source: Iterable[Graph] | None = None) -> XCorpus:
    """Filter a graph stream (built-in enumeration by default) down to the residual set X."""
    if source is None:
        source = (g for n in range(3, max_n + 1) for g in enumerate_graphs(n))
        origin = "built-in enumeration"
    else:
        origin = "external graph6 stream"
    found = (g for g in source if g.n <= max_n and is_x_candidate(g))
    return XCorpus.from_graphs(
        found,
        provenance=(
            f"derive-x max_n={max_n} source={origin}",
            "filter: sigma2 >= n-2, m(G,2) > 2, not in G0..G3 (filter version 1)",
        ),
    )
