"""Exhaustive checks of degree-condition theorems over graph corpora.

Each theorem is a hypothesis, the conclusion m(G, 2) = 2, and an optional
list of permitted exceptions. A counterexample is a graph where the
hypothesis holds, the conclusion fails and no exception applies.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .canon import CANON_MAX_ORDER, are_isomorphic
from .conditions import (
    chvatal_condition,
    is_graphic,
    random_edge_switch,
    realize,
    sharpness_sequence,
    sigma2,
    weak_chvatal_condition,
)
from .families import XCorpus, classify_family, make_complete, make_empty, make_join, make_union
from .graph import Graph, GraphError, components, degree_sequence
from .graph6 import write_graph6
from .percolation import m_equals_two


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and all(d == 2 for d in g.degrees()) and len(components(g)) == 1


def _is_p2_or_p3(g: Graph) -> bool:
    degs = sorted(g.degrees())
    return (g.n == 2 and degs == [1, 1]) or (g.n == 3 and degs == [1, 1, 2])


def _chvatal_exception(g: Graph) -> str | None:
    if len(components(g)) > 1:
        return "disconnected"
    if g.degrees().count(1) == 2 and not _is_p2_or_p3(g):
        return "two-degree-one"
    if _is_c5(g):
        return "C5"
    return None


def _ore_exception(g: Graph, corpus: XCorpus | None) -> str | None:
    return classify_family(g, corpus).kind


@dataclass(frozen=True)
class Theorem:
    name: str
    hypothesis: Callable[[Graph], bool]
    exception: Callable[[Graph], str | None] | None = None


def theorem(name: str, corpus: XCorpus | None = None) -> Theorem:
    if name == "fpr":
        return Theorem("fpr", lambda g: sigma2(g) >= g.n)
    if name == "ore":
        return Theorem("ore", lambda g: sigma2(g) >= g.n - 2, lambda g: _ore_exception(g, corpus))
    if name == "chvatal":
        return Theorem("chvatal", lambda g: weak_chvatal_condition(degree_sequence(g)), _chvatal_exception)
    if name == "corollary":
        return Theorem("corollary", lambda g: chvatal_condition(degree_sequence(g)))
    raise GraphError(f"unknown theorem {name!r}; expected fpr, ore, chvatal or corollary")


THEOREM_NAMES = ("fpr", "ore", "chvatal", "corollary")


@dataclass(frozen=True)
class VerdictRecord:
    index: int
    graph6: str
    n: int
    hypothesis: bool
    conclusion: bool | None
    exception: str | None
    counterexample: bool

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "graph6": self.graph6,
            "n": self.n,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "exception": self.exception,
            "counterexample": self.counterexample,
        }


def evaluate(thm: Theorem, g: Graph, index: int = 0) -> VerdictRecord:
    if g.n < 2:
        raise GraphError(f"graph {index} has order {g.n}; theorems are stated for n >= 2")
    hyp = thm.hypothesis(g)
    conclusion = m_equals_two(g) if hyp else None
    exc = None
    if hyp and not conclusion and thm.exception is not None:
        exc = thm.exception(g)
    return VerdictRecord(
        index=index,
        graph6=write_graph6(g),
        n=g.n,
        hypothesis=hyp,
        conclusion=conclusion,
        exception=exc,
        counterexample=bool(hyp and not conclusion and exc is None),
    )


def iter_records(thm: Theorem, graphs: Iterable[Graph], parallel: int = 1, start: int = 0) -> Iterator[VerdictRecord]:
    """Evaluate a stream lazily, yielding records in input order."""
    indexed = enumerate(graphs, start=start)
    if parallel <= 1:
        for i, g in indexed:
            yield evaluate(thm, g, i)
        return
    with ThreadPoolExecutor(max_workers=parallel) as pool:
        yield from pool.map(lambda item: evaluate(thm, item[1], item[0]), indexed)


@dataclass(frozen=True)
class TheoremVerdict:
    theorem: str
    records: tuple[VerdictRecord, ...] = ()
    totals: dict = field(default_factory=dict)

    @property
    def counterexamples(self) -> list[str]:
        return [r.graph6 for r in self.records if r.counterexample]

    @property
    def passed(self) -> bool:
        return self.totals.get("counterexamples", 0) == 0

    @classmethod
    def from_records(cls, name: str, records: Iterable[VerdictRecord], keep: bool = True) -> TheoremVerdict:
        totals = dict.fromkeys(("graphs", "hypothesis", "conclusion_failed", "excused", "counterexamples"), 0)
        kept = []
        for r in records:
            totals["graphs"] += 1
            totals["hypothesis"] += r.hypothesis
            totals["conclusion_failed"] += r.conclusion is False
            totals["excused"] += r.exception is not None
            totals["counterexamples"] += r.counterexample
            if keep or r.counterexample:
                kept.append(r)
        return cls(name, tuple(kept), totals)

    def merge(self, other: TheoremVerdict) -> TheoremVerdict:
        if other.theorem != self.theorem:
            raise GraphError(f"cannot merge verdicts for {self.theorem} and {other.theorem}")
        keys = set(self.totals) | set(other.totals)
        totals = {k: self.totals.get(k, 0) + other.totals.get(k, 0) for k in sorted(keys)}
        records = tuple(sorted(self.records + other.records, key=lambda r: r.index))
        return TheoremVerdict(self.theorem, records, totals)

    def summary(self) -> dict:
        return {
            "theorem": self.theorem,
            "verdict": "PASS" if self.passed else "FAIL",
            **self.totals,
            "counterexample_graph6": self.counterexamples,
        }


def verify_theorem(
    name: str,
    graphs: Iterable[Graph],
    *,
    corpus: XCorpus | None = None,
    parallel: int = 1,
    keep_records: bool = True,
) -> TheoremVerdict:
    thm = theorem(name, corpus)
    return TheoremVerdict.from_records(name, iter_records(thm, graphs, parallel), keep_records)


def verify_fpr_theorem(graphs: Iterable[Graph], **kw) -> TheoremVerdict:
    return verify_theorem("fpr", graphs, **kw)


def verify_ore_theorem(graphs: Iterable[Graph], **kw) -> TheoremVerdict:
    return verify_theorem("ore", graphs, **kw)


def verify_chvatal_theorem(graphs: Iterable[Graph], **kw) -> TheoremVerdict:
    return verify_theorem("chvatal", graphs, **kw)


def verify_chvatal_corollary(graphs: Iterable[Graph], **kw) -> TheoremVerdict:
    return verify_theorem("corollary", graphs, **kw)


@dataclass(frozen=True)
class MonotoneReport:
    n: int
    i: int
    weak: bool
    sequence: tuple[int, ...]
    graphic: bool
    fails_condition: bool
    passes_weak_condition: bool | None
    universal_vertices: int
    realization_m2: bool
    samples: int
    samples_m2: int
    samples_isomorphic_to_join: int | None

    @property
    def confirmed(self) -> bool:
        ok = (
            self.graphic
            and self.fails_condition
            and self.universal_vertices >= 2
            and self.realization_m2
            and self.samples_m2 == self.samples
        )
        if not self.weak:
            ok = ok and bool(self.passes_weak_condition)
            if self.samples_isomorphic_to_join is not None:
                ok = ok and self.samples_isomorphic_to_join == self.samples
        return ok

    def to_json(self) -> dict:
        out = {k: getattr(self, k) for k in self.__dataclass_fields__}
        out["sequence"] = list(self.sequence)
        out["confirmed"] = self.confirmed
        return out


def join_construction(n: int, i: int) -> Graph:
    """K_i joined to (i isolated vertices plus K_{n-2i})."""
    return make_join(make_complete(i), make_union(make_empty(i), make_complete(n - 2 * i)))


def verify_monotone_counterexample(n: int, i: int, weak: bool = False, samples: int = 100, seed: int = 0) -> MonotoneReport:
    """Check that the sharpness sequence fails the condition while all its realisations percolate from two seeds."""
    pi = sharpness_sequence(n, i, weak)
    rng = random.Random(seed)
    base = realize(pi)
    variants = [random_edge_switch(base, rng) for _ in range(samples)]
    join = join_construction(n, i) if not weak and n <= CANON_MAX_ORDER else None
    return MonotoneReport(
        n=n,
        i=i,
        weak=weak,
        sequence=pi.d,
        graphic=is_graphic(pi),
        fails_condition=not (weak_chvatal_condition(pi) if weak else chvatal_condition(pi)),
        passes_weak_condition=None if weak else weak_chvatal_condition(pi),
        universal_vertices=pi.d.count(n - 1),
        realization_m2=m_equals_two(base),
        samples=samples,
        samples_m2=sum(m_equals_two(v) for v in variants),
        samples_isomorphic_to_join=None if join is None else sum(are_isomorphic(v, join) for v in variants),
    )
