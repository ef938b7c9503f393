"""Span, entity, schema and annotated-document data model.

Offsets are half-open ``[start, end)`` and count Unicode code points, which
is what Python ``str`` indexing already does.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .taxonomy import Taxonomy


@dataclass(frozen=True, order=True)
class Span:
    start: int
    end: int

    def __post_init__(self) -> None:
        if not (isinstance(self.start, int) and isinstance(self.end, int)):
            raise TypeError(f"span offsets must be ints, got {self.start!r}, {self.end!r}")
        if not 0 <= self.start < self.end:
            raise ValueError(f"invalid span ({self.start}, {self.end})")

    def __len__(self) -> int:
        return self.end - self.start

    def contains(self, other: Span) -> bool:
        return self.start <= other.start and other.end <= self.end

    def overlaps(self, other: Span) -> bool:
        return self.start < other.end and other.start < self.end


class SpanRelation(str, enum.Enum):
    EQUAL = "equal"
    DISJOINT = "disjoint"
    A_CONTAINS_B = "a_contains_b"
    B_CONTAINS_A = "b_contains_a"
    CROSSING = "crossing"


def span_relation(a: Span, b: Span) -> SpanRelation:
    if a.start == b.start and a.end == b.end:
        return SpanRelation.EQUAL
    if a.end <= b.start or b.end <= a.start:
        return SpanRelation.DISJOINT
    if a.start <= b.start and b.end <= a.end:
        return SpanRelation.A_CONTAINS_B
    if b.start <= a.start and a.end <= b.end:
        return SpanRelation.B_CONTAINS_A
    return SpanRelation.CROSSING


@dataclass(frozen=True)
class Entity:
    span: Span
    label: str
    confidence: float | None = None
    # cached copy of the covered text; not part of identity
    surface: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.confidence is not None and not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence {self.confidence} outside [0, 1]")

    @classmethod
    def at(
        cls,
        start: int,
        end: int,
        label: str,
        confidence: float | None = None,
        text: str | None = None,
    ) -> Entity:
        """Build an entity, caching the surface from ``text`` when given."""
        surface = text[start:end] if text is not None else None
        return cls(Span(start, end), label, confidence, surface)

    @property
    def start(self) -> int:
        return self.span.start

    @property
    def end(self) -> int:
        return self.span.end

    @property
    def key(self) -> tuple[int, int, str]:
        return (self.span.start, self.span.end, self.label)

    def sort_key(self) -> tuple[int, int, str]:
        return self.key


def sort_entities(entities: Iterable[Entity]) -> list[Entity]:
    return sorted(entities, key=Entity.sort_key)


class DuplicateEntityError(ValueError):
    """Two entities share the same (start, end, label) triple."""


@dataclass(frozen=True)
class AnnotatedDocument:
    id: str
    text: str
    entities: tuple[Entity, ...] = ()
    language: str | None = None
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        entities = tuple(self.entities)
        seen: set[tuple[int, int, str]] = set()
        for ent in entities:
            if ent.end > len(self.text):
                raise ValueError(
                    f"document {self.id!r}: span ({ent.start}, {ent.end}) exceeds text length {len(self.text)}"
                )
            if ent.key in seen:
                raise DuplicateEntityError(f"document {self.id!r}: duplicate entity {ent.key}")
            seen.add(ent.key)
        object.__setattr__(self, "entities", entities)
        object.__setattr__(self, "metadata", MappingProxyType(dict(self.metadata)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnnotatedDocument):
            return NotImplemented
        return (
            self.id == other.id
            and self.text == other.text
            and self.entities == other.entities
            and self.language == other.language
            and dict(self.metadata) == dict(other.metadata)
        )

    def __hash__(self) -> int:
        return hash((self.id, self.text, self.entities, self.language))

    def surface(self, entity: Entity) -> str:
        return self.text[entity.start : entity.end]

    def replace(self, **changes) -> AnnotatedDocument:
        fields = {
            "id": self.id,
            "text": self.text,
            "entities": self.entities,
            "language": self.language,
            "metadata": dict(self.metadata),
        }
        fields.update(changes)
        return AnnotatedDocument(**fields)


class SchemaError(ValueError):
    pass


@dataclass(frozen=True)
class Schema:
    """Ordered label set, each with an optional description, conditioning detection."""

    entries: tuple[tuple[str, str | None], ...]

    def __post_init__(self) -> None:
        entries = tuple((label, desc) for label, desc in self.entries)
        if not entries:
            raise SchemaError("schema must contain at least one label")
        labels = [label for label, _ in entries]
        if len(set(labels)) != len(labels):
            dupes = sorted({label for label in labels if labels.count(label) > 1})
            raise SchemaError(f"duplicate schema labels: {', '.join(dupes)}")
        for label in labels:
            if not isinstance(label, str) or not label:
                raise SchemaError(f"invalid label {label!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_labels(cls, labels: Iterable[str] | Mapping[str, str | None]) -> Schema:
        if isinstance(labels, Mapping):
            return cls(tuple(labels.items()))
        return cls(tuple((label, None) for label in labels))

    @classmethod
    def from_taxonomy(cls, taxonomy: Taxonomy) -> Schema:
        return cls(tuple((info.name, info.description) for info in taxonomy))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def description(self, label: str) -> str | None:
        return dict(self.entries).get(label)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    severity: str = "error"
    entity: Entity | None = None

    @property
    def is_error(self) -> bool:
        return self.severity == "error"


def validate_document(
    doc: AnnotatedDocument,
    taxonomy: Taxonomy | None = None,
    strict: bool = True,
) -> list[Violation]:
    """Check annotation invariants; violations are returned, never raised.

    Surface mismatches and boundary whitespace are always errors.  Unknown
    labels and crossing overlaps are errors in strict mode and warnings
    otherwise.  Nesting and identical spans under different labels are legal.
    """
    out: list[Violation] = []
    soft = "error" if strict else "warning"
    text = doc.text
    for ent in doc.entities:
        if ent.end > len(text):
            out.append(Violation("out_of_bounds", f"{ent.key} exceeds text length {len(text)}", entity=ent))
            continue
        actual = text[ent.start : ent.end]
        if ent.surface is not None and ent.surface != actual:
            out.append(
                Violation(
                    "surface_mismatch",
                    f"{ent.key}: surface {ent.surface!r} != text slice {actual!r}",
                    entity=ent,
                )
            )
        if actual != actual.strip():
            out.append(Violation("untrimmed_span", f"{ent.key}: span has boundary whitespace", entity=ent))
        if taxonomy is not None and ent.label not in taxonomy:
            out.append(Violation("unknown_label", f"{ent.key}: label {ent.label!r} not in taxonomy", soft, ent))

    ordered = sort_entities(doc.entities)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if b.start >= a.end:
                break
            if span_relation(a.span, b.span) is SpanRelation.CROSSING:
                out.append(
                    Violation("crossing_overlap", f"{a.key} crosses {b.key}", soft, b)
                )
    return out


def errors_only(violations: Sequence[Violation]) -> list[Violation]:
    return [v for v in violations if v.is_error]
