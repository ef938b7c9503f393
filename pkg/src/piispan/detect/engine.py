"""Label-conditioned extraction over the builtin rules or a remote model."""

from __future__ import annotations

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Protocol, Sequence

from ..core import Entity, Schema, SchemaError, Span, sort_entities
from ..taxonomy import Taxonomy, builtin_taxonomy
from .names import NameRecognizer, place_rules
from .rules import DetectorRule, builtin_rules

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.5
# raw hits below this never surface, whatever the request threshold
MIN_CONFIDENCE = 0.25
DEFAULT_MAX_TEXT_LENGTH = 100_000

_CHAIN_GAP = re.compile(r"[ ,]{0,3}")


class DetectionError(Exception):
    """Base class for detection failures."""


class TextTooLongError(DetectionError):
    pass


class RemoteUnreachableError(DetectionError):
    pass


class RemoteMalformedResponseError(DetectionError):
    pass


@dataclass(frozen=True)
class DetectionRequest:
    text: str
    schema: Schema
    threshold: float = DEFAULT_THRESHOLD
    include_confidence: bool = True
    include_spans: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.schema, Schema):
            object.__setattr__(self, "schema", Schema.from_labels(self.schema))
        if not 0.0 <= self.threshold <= 1.0:
            raise ValueError(f"threshold {self.threshold} outside [0, 1]")


@dataclass(frozen=True)
class BackendDescriptor:
    kind: str = "builtin_rules"
    endpoint: str | None = None
    timeout: float = 30.0
    max_text_length: int = DEFAULT_MAX_TEXT_LENGTH
    max_in_flight: int = 4

    def __post_init__(self) -> None:
        if self.kind not in ("builtin_rules", "remote"):
            raise ValueError(f"unknown backend kind {self.kind!r}")
        if self.kind == "remote" and not self.endpoint:
            raise ValueError("remote backend requires an endpoint")
        if self.max_text_length <= 0:
            raise ValueError("max_text_length must be positive")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")


BUILTIN = BackendDescriptor()


class Recognizer(Protocol):
    labels: frozenset[str]

    def find(self, text: str) -> list[Entity]: ...


class _RuleRecognizer:
    def __init__(self, rule: DetectorRule):
        self.rule = rule
        self.labels = frozenset({rule.label})

    def find(self, text: str) -> list[Entity]:
        return self.rule.find(text)


def dedupe_same_label(entities: Iterable[Entity]) -> list[Entity]:
    """Among overlapping hits of one label keep the longest (then most confident)."""
    ranked = sorted(entities, key=lambda e: (-(e.end - e.start), -(e.confidence or 0.0), e.start, e.label))
    kept: dict[str, list[Span]] = {}
    out = []
    for ent in ranked:
        spans = kept.setdefault(ent.label, [])
        if any(ent.span.overlaps(s) for s in spans):
            continue
        spans.append(ent.span)
        out.append(ent)
    return out


def _parent_order(taxonomy: Taxonomy) -> list[str]:
    def height(name: str) -> int:
        kids = taxonomy.children(name)
        return 0 if not kids else 1 + max(height(k) for k in kids)

    parents = [info.name for info in taxonomy if taxonomy.children(info.name)]
    return sorted(parents, key=lambda p: (height(p), taxonomy.names.index(p)))


def emit_parents(text: str, hits: list[Entity], taxonomy: Taxonomy, wanted: set[str]) -> list[Entity]:
    """Add coarse-parent entities over runs of adjacent child hits.

    Children separated only by spaces/commas (at most three characters) and
    carrying distinct labels form one run; the parent spans the run and takes
    the highest member confidence.
    """
    result = list(hits)
    for parent in _parent_order(taxonomy):
        if parent not in wanted:
            continue
        kids = set(taxonomy.children(parent))
        members = sorted((e for e in result if e.label in kids), key=lambda e: (e.start, -e.end))
        runs: list[list[Entity]] = []
        for ent in members:
            if runs:
                run = runs[-1]
                run_end = max(e.end for e in run)
                labels = {e.label for e in run}
                if ent.start < run_end:
                    if ent.label not in labels:
                        run.append(ent)
                        continue
                elif ent.label not in labels and _CHAIN_GAP.fullmatch(text[run_end : ent.start]):
                    run.append(ent)
                    continue
            runs.append([ent])
        for run in runs:
            start = min(e.start for e in run)
            end = max(e.end for e in run)
            conf = max(e.confidence or 0.0 for e in run)
            result.append(Entity(Span(start, end), parent, conf, text[start:end]))
    return result


def _wanted_labels(schema: Schema, taxonomy: Taxonomy) -> set[str]:
    """Schema labels plus every taxonomy descendant needed to build them."""
    wanted = set(schema.labels)
    frontier = [label for label in schema.labels if label in taxonomy]
    while frontier:
        label = frontier.pop()
        for child in taxonomy.children(label):
            if child not in wanted:
                wanted.add(child)
                frontier.append(child)
    return wanted


class BuiltinDetector:
    """Deterministic pattern + gazetteer detector; a pure function of its input."""

    def __init__(
        self,
        rules: Sequence[DetectorRule] | None = None,
        taxonomy: Taxonomy | None = None,
        extra_recognizers: Sequence[Recognizer] = (),
    ):
        self.taxonomy = taxonomy or builtin_taxonomy()
        rule_list = list(builtin_rules() + place_rules()) if rules is None else list(rules)
        self.recognizers: list[Recognizer] = [_RuleRecognizer(r) for r in rule_list]
        if rules is None:
            self.recognizers.append(NameRecognizer())
        self.recognizers.extend(extra_recognizers)

    def detect(self, req: DetectionRequest) -> list[Entity]:
        wanted = _wanted_labels(req.schema, self.taxonomy)
        raw: list[Entity] = []
        for rec in self.recognizers:
            if rec.labels & wanted:
                raw.extend(e for e in rec.find(req.text) if e.label in wanted)
        raw = [e for e in raw if (e.confidence or 0.0) >= MIN_CONFIDENCE]
        raw = dedupe_same_label(raw)
        combined = dedupe_same_label(emit_parents(req.text, raw, self.taxonomy, wanted))
        schema_labels = set(req.schema.labels)
        out = []
        for ent in combined:
            if ent.label not in schema_labels or (ent.confidence or 0.0) < req.threshold:
                continue
            if not req.include_confidence:
                ent = Entity(ent.span, ent.label, None, ent.surface)
            out.append(ent)
        return sort_entities(out)


_DEFAULT_DETECTOR: BuiltinDetector | None = None


def default_detector() -> BuiltinDetector:
    global _DEFAULT_DETECTOR
    if _DEFAULT_DETECTOR is None:
        _DEFAULT_DETECTOR = BuiltinDetector()
    return _DEFAULT_DETECTOR


def extract_entities(req: DetectionRequest, backend: BackendDescriptor = BUILTIN) -> list[Entity]:
    """Return the schema-labelled spans of ``req.text`` at or above the threshold.

    Results are sorted by (start, end, label).
    """
    if len(req.text) > backend.max_text_length:
        raise TextTooLongError(f"text has {len(req.text)} characters, limit is {backend.max_text_length}")
    if backend.kind == "remote":
        from .remote import remote_extract

        return remote_extract(req, backend)
    return default_detector().detect(req)


def extract_many(
    texts: Sequence[str],
    schema: Schema | Iterable[str],
    backend: BackendDescriptor = BUILTIN,
    *,
    threshold: float = DEFAULT_THRESHOLD,
    include_confidence: bool = True,
    workers: int = 1,
) -> list[list[Entity]]:
    """Detect over many texts; output order follows input order for any worker count."""
    if not isinstance(schema, Schema):
        schema = Schema.from_labels(schema)
    requests = [DetectionRequest(t, schema, threshold, include_confidence) for t in texts]
    limit = backend.max_in_flight if backend.kind == "remote" else workers
    n = max(1, min(workers, limit))
    if n == 1:
        return [extract_entities(r, backend) for r in requests]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(lambda r: extract_entities(r, backend), requests))


__all__ = [
    "BackendDescriptor",
    "BuiltinDetector",
    "DetectionError",
    "DetectionRequest",
    "RemoteMalformedResponseError",
    "RemoteUnreachableError",
    "SchemaError",
    "TextTooLongError",
    "extract_entities",
    "extract_many",
]
