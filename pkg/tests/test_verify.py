import pytest

from perckit.canon import all_graphs, are_isomorphic
from perckit.families import XCorpus, make_complete, make_cycle, make_g2, make_union
from perckit.graph import Graph, GraphError
from perckit.graph6 import parse_graph6
from perckit.verify import (
    TheoremVerdict,
    evaluate,
    iter_records,
    join_construction,
    theorem,
    verify_chvatal_corollary,
    verify_chvatal_theorem,
    verify_fpr_theorem,
    verify_monotone_counterexample,
    verify_ore_theorem,
    verify_theorem,
)

SMALL = list(all_graphs(7, min_n=2))


def test_fpr_examples():
    rec = evaluate(theorem("fpr"), make_complete(5))
    assert rec.hypothesis and rec.conclusion and not rec.counterexample
    rec = evaluate(theorem("fpr"), make_cycle(5))
    assert not rec.hypothesis and rec.conclusion is None


def test_ore_exceptions_are_labelled():
    assert evaluate(theorem("ore"), make_cycle(5)).exception == "X"
    assert evaluate(theorem("ore"), make_g2(4, 4)).exception == "G2"
    assert evaluate(theorem("ore"), make_union(make_complete(3), make_complete(3))).exception == "G0"


def test_chvatal_exceptions_are_labelled():
    thm = theorem("chvatal")
    assert evaluate(thm, make_cycle(5)).exception == "C5"
    rec = evaluate(thm, Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert rec.hypothesis and rec.exception == "two-degree-one"


def test_missing_corpus_exposes_counterexample():
    verdict = verify_ore_theorem([make_cycle(5)], corpus=XCorpus.from_graphs([]))
    assert not verdict.passed
    assert verdict.counterexamples == ["Dhc"]
    assert verdict.summary()["verdict"] == "FAIL"


def test_order_one_rejected():
    with pytest.raises(GraphError):
        evaluate(theorem("fpr"), Graph.empty(1))


def test_unknown_theorem():
    with pytest.raises(GraphError):
        theorem("hamilton")


@pytest.mark.parametrize("fn", [verify_fpr_theorem, verify_ore_theorem, verify_chvatal_theorem, verify_chvatal_corollary])
def test_small_orders_pass(fn):
    verdict = fn(SMALL)
    assert verdict.passed and verdict.totals["graphs"] == len(SMALL)
    assert verdict.totals["hypothesis"] > 0


def test_chvatal_exception_kinds_seen():
    verdict = verify_chvatal_theorem(SMALL)
    kinds = {r.exception for r in verdict.records if r.exception}
    assert kinds == {"disconnected", "two-degree-one", "C5"}


def test_corollary_has_no_exceptions():
    verdict = verify_chvatal_corollary(SMALL)
    assert verdict.totals["conclusion_failed"] == 0


def test_merge_is_order_insensitive():
    recs = list(iter_records(theorem("ore"), SMALL))
    a = TheoremVerdict.from_records("ore", recs[:300])
    b = TheoremVerdict.from_records("ore", recs[300:700])
    c = TheoremVerdict.from_records("ore", recs[700:])
    whole = TheoremVerdict.from_records("ore", recs)
    assert a.merge(b).merge(c) == a.merge(b.merge(c)) == c.merge(a).merge(b) == whole
    with pytest.raises(GraphError):
        a.merge(TheoremVerdict.from_records("fpr", []))


def test_parallel_matches_serial():
    serial = verify_theorem("chvatal", SMALL)
    threaded = verify_theorem("chvatal", SMALL, parallel=4)
    assert serial == threaded


def test_counterexample_list_is_deterministic():
    corpus = XCorpus.from_graphs([])
    runs = [verify_ore_theorem(SMALL, corpus=corpus).counterexamples for _ in range(2)]
    assert runs[0] == runs[1] and len(runs[0]) > 0
    rerun = verify_ore_theorem([parse_graph6(line) for line in runs[0]], corpus=corpus)
    assert rerun.counterexamples == runs[0]


def test_keep_records_false_keeps_totals():
    verdict = verify_theorem("fpr", SMALL, keep_records=False)
    assert verdict.records == () and verdict.totals["graphs"] == len(SMALL)


def test_join_construction_degrees():
    g = join_construction(12, 3)
    assert sorted(g.degrees()) == [3, 3, 3] + [8] * 6 + [11] * 3


@pytest.mark.parametrize("i", [2, 3])
def test_monotone_report_strong(i):
    report = verify_monotone_counterexample(12, i, samples=20)
    assert report.confirmed and report.samples_isomorphic_to_join == 20
    assert report.to_json()["confirmed"] is True


@pytest.mark.parametrize("i", [2, 3])
def test_monotone_report_weak(i):
    report = verify_monotone_counterexample(12, i, weak=True, samples=20)
    assert report.confirmed and report.samples_isomorphic_to_join is None


def test_realization_is_the_join():
    from perckit.conditions import realize, sharpness_sequence

    assert are_isomorphic(realize(sharpness_sequence(10, 3)), join_construction(10, 3))
