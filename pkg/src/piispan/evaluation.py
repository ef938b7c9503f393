"""Exact-match span evaluation: per-label and micro P/R/F1, macro over corpora."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .core import AnnotatedDocument, Entity
from .mapping import LabelMap, map_entities

DEFAULT_EVAL_THRESHOLD = 0.5


class AlignmentError(ValueError):
    def __init__(
        self,
        missing_pred: Sequence[str],
        missing_gold: Sequence[str],
        corpus: str = "",
        duplicates: Sequence[str] = (),
    ):
        self.missing_pred = tuple(missing_pred)
        self.missing_gold = tuple(missing_gold)
        self.duplicates = tuple(duplicates)
        parts = []
        if self.duplicates:
            parts.append(f"duplicate document ids: {', '.join(self.duplicates)}")
        if self.missing_pred:
            parts.append(f"no prediction for gold ids: {', '.join(self.missing_pred)}")
        if self.missing_gold:
            parts.append(f"no gold for predicted ids: {', '.join(self.missing_gold)}")
        prefix = f"corpus {corpus!r}: " if corpus else ""
        super().__init__(prefix + "; ".join(parts))


class DuplicateTripleError(ValueError):
    pass


@dataclass(frozen=True)
class MatchResult:
    true_positives: tuple[Entity, ...]
    false_positives: tuple[Entity, ...]
    false_negatives: tuple[Entity, ...]

    @property
    def tp(self) -> int:
        return len(self.true_positives)

    @property
    def fp(self) -> int:
        return len(self.false_positives)

    @property
    def fn(self) -> int:
        return len(self.false_negatives)

    def counts_by_label(self) -> dict[str, tuple[int, int, int]]:
        tp = Counter(e.label for e in self.true_positives)
        fp = Counter(e.label for e in self.false_positives)
        fn = Counter(e.label for e in self.false_negatives)
        return {label: (tp[label], fp[label], fn[label]) for label in sorted(set(tp) | set(fp) | set(fn))}


def _triples(entities: Sequence[Entity], side: str) -> dict[tuple[int, int, str], Entity]:
    out: dict[tuple[int, int, str], Entity] = {}
    for e in entities:
        if e.key in out:
            raise DuplicateTripleError(f"duplicate {side} triple {e.key}")
        out[e.key] = e
    return out


def match_exact(gold: Sequence[Entity], pred: Sequence[Entity]) -> MatchResult:
    """A prediction is correct only if label, start and end all equal a gold entity."""
    gold_by_key = _triples(gold, "gold")
    pred_by_key = _triples(pred, "prediction")
    tp = [p for k, p in pred_by_key.items() if k in gold_by_key]
    fp = [p for k, p in pred_by_key.items() if k not in gold_by_key]
    fn = [g for k, g in gold_by_key.items() if k not in pred_by_key]
    return MatchResult(tuple(tp), tuple(fp), tuple(fn))


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f1: float
    tp: int = 0
    fp: int = 0
    fn: int = 0

    @property
    def support(self) -> int:
        return self.tp + self.fn

    def as_dict(self) -> dict:
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "support": self.support,
        }


def f1_from_pr(p: float, r: float) -> float:
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def prf_from_counts(tp: int, fp: int, fn: int) -> PRF:
    if min(tp, fp, fn) < 0:
        raise ValueError("counts must be non-negative")
    p = tp / (tp + fp) if tp + fp else 0.0
    r = tp / (tp + fn) if tp + fn else 0.0
    return PRF(p, r, f1_from_pr(p, r), tp, fp, fn)


@dataclass(frozen=True)
class CorpusReport:
    name: str
    documents: int
    micro: PRF
    per_label: Mapping[str, PRF]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "documents": self.documents,
            "micro": self.micro.as_dict(),
            "per_label": {label: prf.as_dict() for label, prf in sorted(self.per_label.items())},
        }


@dataclass(frozen=True)
class EvalReport:
    corpora: tuple[CorpusReport, ...]
    per_label: Mapping[str, PRF] = field(default_factory=dict)

    @property
    def corpus_f1(self) -> dict[str, float]:
        return {c.name: c.micro.f1 for c in self.corpora}

    @property
    def macro_f1(self) -> float:
        """Unweighted mean of the per-corpus micro F1 scores."""
        if not self.corpora:
            return 0.0
        return sum(c.micro.f1 for c in self.corpora) / len(self.corpora)

    @property
    def micro(self) -> PRF:
        tp = sum(c.micro.tp for c in self.corpora)
        fp = sum(c.micro.fp for c in self.corpora)
        fn = sum(c.micro.fn for c in self.corpora)
        return prf_from_counts(tp, fp, fn)

    def as_dict(self) -> dict:
        return {
            "corpora": [c.as_dict() for c in self.corpora],
            "per_label": {label: prf.as_dict() for label, prf in sorted(self.per_label.items())},
            "corpus_f1": self.corpus_f1,
            "macro_f1": self.macro_f1,
            "micro": self.micro.as_dict(),
        }

    def write_json(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.as_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")

    def to_text(self) -> str:
        lines = []
        for c in self.corpora:
            lines.append(f"== {c.name} ({c.documents} documents)")
            lines.append(f"{'label':<24}{'P':>8}{'R':>8}{'F1':>8}{'TP':>7}{'FP':>7}{'FN':>7}")
            for label, prf in sorted(c.per_label.items()):
                lines.append(_row(label, prf))
            lines.append(_row("micro", c.micro))
        if len(self.corpora) > 1:
            lines.append("== summary")
            for name, f1 in self.corpus_f1.items():
                lines.append(f"{name:<24}F1 {f1:.3f}")
            lines.append(f"{'avg':<24}F1 {self.macro_f1:.3f}")
        return "\n".join(lines)


def _row(label: str, prf: PRF) -> str:
    return f"{label:<24}{prf.precision:>8.3f}{prf.recall:>8.3f}{prf.f1:>8.3f}{prf.tp:>7}{prf.fp:>7}{prf.fn:>7}"


def _filter(entities: Sequence[Entity], threshold: float) -> list[Entity]:
    return [e for e in entities if e.confidence is None or e.confidence >= threshold]


def _align(gold: Sequence[AnnotatedDocument], pred: Sequence[AnnotatedDocument], name: str):
    gold_ids = {d.id: d for d in gold}
    pred_ids = {d.id: d for d in pred}
    missing_pred = [i for i in gold_ids if i not in pred_ids]
    missing_gold = [i for i in pred_ids if i not in gold_ids]
    duplicates = sorted(
        {i for side in (gold, pred) for i, n in Counter(d.id for d in side).items() if n > 1}
    )
    if missing_pred or missing_gold or duplicates:
        raise AlignmentError(missing_pred, missing_gold, name, duplicates)
    return [(g, pred_ids[g.id]) for g in gold]


def _score_corpus(
    name: str,
    gold: Sequence[AnnotatedDocument],
    pred: Sequence[AnnotatedDocument],
    label_map: LabelMap | None,
    gold_map: LabelMap | None,
    threshold: float,
    workers: int,
) -> tuple[CorpusReport, Counter]:
    pairs = _align(gold, pred, name)

    def score(pair: tuple[AnnotatedDocument, AnnotatedDocument]) -> MatchResult:
        g, p = pair
        p_ents = _filter(p.entities, threshold)
        if label_map is not None:
            p_ents = map_entities(p_ents, label_map)
        g_ents = list(g.entities)
        if gold_map is not None:
            g_ents = map_entities(g_ents, gold_map)
        return match_exact(g_ents, p_ents)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(score, pairs))
    else:
        results = [score(pair) for pair in pairs]

    counts: Counter = Counter()
    for res in results:
        for label, (tp, fp, fn) in res.counts_by_label().items():
            counts[(label, "tp")] += tp
            counts[(label, "fp")] += fp
            counts[(label, "fn")] += fn
    labels = sorted({label for label, _ in counts})
    per_label = {
        label: prf_from_counts(counts[(label, "tp")], counts[(label, "fp")], counts[(label, "fn")])
        for label in labels
    }
    micro = prf_from_counts(
        sum(p.tp for p in per_label.values()),
        sum(p.fp for p in per_label.values()),
        sum(p.fn for p in per_label.values()),
    )
    return CorpusReport(name, len(pairs), micro, per_label), counts


def evaluate_corpus(
    gold: Sequence[AnnotatedDocument] | Mapping[str, Sequence[AnnotatedDocument]],
    pred: Sequence[AnnotatedDocument] | Mapping[str, Sequence[AnnotatedDocument]],
    label_map: LabelMap | None = None,
    *,
    gold_map: LabelMap | None = None,
    threshold: float = DEFAULT_EVAL_THRESHOLD,
    workers: int = 1,
) -> EvalReport:
    """Score predictions against gold, one or several named corpora at a time.

    ``label_map`` projects predictions onto the gold label set; ``gold_map``
    does the same for gold annotations that are not already in it.
    Predictions under ``threshold`` are discarded first.
    """
    if isinstance(gold, Mapping) != isinstance(pred, Mapping):
        raise TypeError("gold and pred must both be sequences or both be mappings")
    if not isinstance(gold, Mapping):
        gold, pred = {"corpus": gold}, {"corpus": pred}
    if set(gold) != set(pred):
        raise AlignmentError(sorted(set(gold) - set(pred)), sorted(set(pred) - set(gold)), "<corpora>")
    reports = []
    pooled: Counter = Counter()
    for name in gold:
        report, counts = _score_corpus(
            name, list(gold[name]), list(pred[name]), label_map, gold_map, threshold, workers
        )
        reports.append(report)
        pooled.update(counts)
    labels = sorted({label for label, _ in pooled})
    per_label = {
        label: prf_from_counts(pooled[(label, "tp")], pooled[(label, "fp")], pooled[(label, "fn")])
        for label in labels
    }
    return EvalReport(tuple(reports), per_label)
