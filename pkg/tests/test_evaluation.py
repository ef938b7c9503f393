from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import match_oracle, prf_oracle
from piispan.core import AnnotatedDocument, Entity, Span
from piispan.evaluation import (
    AlignmentError,
    DuplicateTripleError,
    evaluate_corpus,
    f1_from_pr,
    match_exact,
    prf_from_counts,
)
from piispan.mapping import label_map_from_dict

triples = st.tuples(st.integers(0, 6), st.integers(1, 3), st.sampled_from(["a", "b"])).map(
    lambda t: (t[0], t[0] + t[1], t[2])
)


def _ents(ts):
    return [Entity(Span(s, e), label, 0.9) for s, e, label in ts]


@given(st.sets(triples, max_size=6), st.sets(triples, max_size=6))
def test_match_counts_equal_set_oracle(gold, pred):
    res = match_exact(_ents(gold), _ents(pred))
    assert (res.tp, res.fp, res.fn) == match_oracle(list(gold), list(pred))


def test_boundary_off_by_one_is_fp_and_fn():
    res = match_exact(_ents([(0, 4, "a")]), _ents([(0, 5, "a")]))
    assert (res.tp, res.fp, res.fn) == (0, 1, 1)


def test_label_mismatch_is_fp_and_fn():
    res = match_exact(_ents([(0, 4, "a")]), _ents([(0, 4, "b")]))
    assert (res.tp, res.fp, res.fn) == (0, 1, 1)


def test_duplicate_triples_rejected():
    with pytest.raises(DuplicateTripleError):
        match_exact(_ents([(0, 1, "a")]) * 2, [])


def test_equal_counts_give_half():
    prf = prf_from_counts(5, 5, 5)
    assert (prf.precision, prf.recall, prf.f1) == (0.5, 0.5, 0.5)


def test_zero_denominators():
    assert prf_from_counts(0, 0, 0).f1 == 0.0
    assert prf_from_counts(0, 3, 0).precision == 0.0
    assert prf_from_counts(0, 0, 3).recall == 0.0
    assert f1_from_pr(0.0, 0.0) == 0.0


def test_prf_matches_oracle_randomly():
    rng = random.Random(5)
    for _ in range(500):
        tp, fp, fn = rng.randint(0, 30), rng.randint(0, 30), rng.randint(0, 30)
        prf = prf_from_counts(tp, fp, fn)
        assert (prf.precision, prf.recall, prf.f1) == pytest.approx(prf_oracle(tp, fp, fn))


def _doc(i, ents, text="x" * 20):
    return AnnotatedDocument(f"d{i}", text, tuple(_ents(ents)))


def test_micro_pools_then_macro_averages():
    gold_a = [_doc(0, [(0, 2, "a"), (3, 5, "a")]), _doc(1, [(0, 2, "b")])]
    pred_a = [_doc(0, [(0, 2, "a")]), _doc(1, [(0, 2, "b"), (5, 6, "b")])]
    gold_b = [_doc(0, [(0, 2, "a")])]
    pred_b = [_doc(0, [(1, 2, "a")])]
    report = evaluate_corpus({"A": gold_a, "B": gold_b}, {"A": pred_a, "B": pred_b})
    f1_a = prf_oracle(2, 1, 1)[2]
    assert report.corpus_f1 == pytest.approx({"A": f1_a, "B": 0.0})
    assert report.macro_f1 == pytest.approx(f1_a / 2)
    assert report.micro.tp == 2 and report.micro.fp == 2 and report.micro.fn == 2
    assert report.per_label["a"].tp == 1
    assert "avg" in report.to_text()


def test_threshold_filters_predictions():
    gold = [_doc(0, [(0, 2, "a")])]
    pred = [AnnotatedDocument("d0", "x" * 20, (Entity(Span(0, 2), "a", 0.4),))]
    assert evaluate_corpus(gold, pred).micro.tp == 0
    assert evaluate_corpus(gold, pred, threshold=0.3).micro.tp == 1


def test_maps_applied_on_each_side():
    gold = [_doc(0, [(0, 2, "first_name")])]
    pred = [_doc(0, [(0, 2, "person_name")])]
    pm = label_map_from_dict({"targets": ["name"], "map": {"person_name": "name"}})
    gm = label_map_from_dict({"targets": ["name"], "map": {"first_name": "name"}})
    assert evaluate_corpus(gold, pred, pm, gold_map=gm).micro.f1 == 1.0


def test_alignment_errors():
    with pytest.raises(AlignmentError):
        evaluate_corpus([_doc(0, [])], [_doc(1, [])])
    with pytest.raises(AlignmentError):
        evaluate_corpus([_doc(0, []), _doc(0, [])], [_doc(0, [])])
    with pytest.raises(TypeError):
        evaluate_corpus({"A": []}, [])


def test_workers_do_not_change_result():
    rng = random.Random(9)
    gold, pred = [], []
    for i in range(40):
        g = {(rng.randint(0, 6), 0, rng.choice("ab")) for _ in range(4)}
        g = [(s, s + 2, lab) for s, _, lab in g]
        p = [t for t in g if rng.random() < 0.7] + [(8, 10, "a")]
        gold.append(_doc(i, set(g)))
        pred.append(_doc(i, set(p)))
    assert evaluate_corpus(gold, pred).as_dict() == evaluate_corpus(gold, pred, workers=4).as_dict()


def test_report_json(tmp_path):
    import json

    path = tmp_path / "r.json"
    evaluate_corpus([_doc(0, [(0, 2, "a")])], [_doc(0, [(0, 2, "a")])]).write_json(path)
    data = json.loads(path.read_text())
    assert data["micro"]["f1"] == 1.0 and data["macro_f1"] == 1.0
