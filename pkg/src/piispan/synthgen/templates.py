"""Offline template backend: constraint set in, annotated document out."""

from __future__ import annotations

import random

from ..core import AnnotatedDocument, Entity, Span
from ..resources import LOCALES
from ..taxonomy import Taxonomy, builtin_taxonomy
from .constraints import DOCUMENT_TYPES, ConstraintSet, derive_seed
from .fakers import Value, fake_unit
from .phrases import (
    CLOSINGS,
    ENV_KEYS,
    EXTRA_LINES,
    GREETINGS,
    LEAD_INS,
    SPEAKERS,
    TONE_LINES,
    field_name,
    title,
)
from .units import Unit, plan_units

PROSE_TYPES = frozenset({"chat_log", "support_ticket"})


class UnsupportedCombinationError(ValueError):
    """No template exists for the requested document type and locale."""


def supported(document_type: str, locale: str) -> bool:
    return document_type in DOCUMENT_TYPES and locale in LOCALES


class _Doc:
    def __init__(self) -> None:
        self.lines: list[str] = []
        self.spans: list[tuple[int, int, str]] = []
        self.pos = 0

    def line(self, text: str, value: Value | None = None, offset: int = 0) -> None:
        if value is not None:
            for s, e, label in value.spans:
                self.spans.append((self.pos + offset + s, self.pos + offset + e, label))
        self.lines.append(text)
        self.pos += len(text) + 1

    def framed(self, template: str, value: Value, **fmt: str) -> None:
        head, _, tail = template.partition("{value}")
        head = head.format(**fmt)
        self.line(head + value.text + tail.format(**fmt), value, len(head))

    @property
    def text(self) -> str:
        return "\n".join(self.lines)


def _mid_sentence(field: str) -> str:
    return field if field[:2].isupper() else field[:1].lower() + field[1:]


def _render(rng: random.Random, cs: ConstraintSet, units: list[Unit]) -> _Doc:
    d = cs.diversity
    loc, reg = d.locale, d.register
    doc = _Doc()
    values = [(u, fake_unit(u, rng, loc)) for u in units]
    tone = TONE_LINES[loc][d.tone]
    mixed = None
    if d.mixed_language:
        mixed = TONE_LINES[rng.choice([x for x in LOCALES if x != loc])][d.tone]

    if d.document_type in PROSE_TYPES:
        chat = d.document_type == "chat_log"
        agent, customer = SPEAKERS[loc]
        minute = rng.randint(0, 30)

        def prefix(speaker: str) -> str:
            nonlocal minute
            minute += rng.randint(1, 3)
            return f"[{9 + minute // 60:02d}:{minute % 60:02d}] {speaker}: " if chat else ""

        doc.line(title(d.document_type, loc))
        doc.line(prefix(agent) + GREETINGS[loc][reg])
        doc.line(prefix(customer) + tone)
        if mixed:
            doc.line(prefix(customer) + mixed)
        for unit, value in values:
            template = prefix(customer).replace("{", "{{").replace("}", "}}") + rng.choice(LEAD_INS[loc][reg])
            doc.framed(template, value, field=_mid_sentence(field_name(unit.field, loc)))
        doc.line(prefix(agent) + CLOSINGS[loc][reg])
        return doc

    if d.document_type == "credential_file":
        doc.line(f"# {title(d.document_type, loc)}")
        doc.line(f"# {tone}")
        if mixed:
            doc.line(f"# {mixed}")
        for unit, value in values:
            key = ENV_KEYS.get(unit.field)
            if unit.field == "access_token" and rng.random() < 0.4:
                doc.framed("RESET_URL=https://auth.example.com/reset?token={value}", value)
            elif key:
                doc.framed(f"{key}={{value}}", value)
            else:
                doc.framed("# {field}: {value}", value, field=field_name(unit.field, loc))
        return doc

    bullet = "- " if d.document_type == "crm_note" else ""
    doc.line(title(d.document_type, loc))
    if d.document_type == "crm_note" or reg == "informal":
        doc.line(tone)
    if mixed:
        doc.line(mixed)
    for unit, value in values:
        doc.framed(bullet + "{field}: {value}", value, field=field_name(unit.field, loc))
    extra = EXTRA_LINES.get(d.document_type)
    if extra:
        doc.line(extra[loc])
    return doc


def generate_template(
    cs: ConstraintSet,
    doc_id: str | None = None,
    taxonomy: Taxonomy | None = None,
) -> AnnotatedDocument:
    """Render one document that satisfies ``cs`` by construction."""
    d = cs.diversity
    if not supported(d.document_type, d.locale):
        raise UnsupportedCombinationError(
            f"no template for document type {d.document_type!r} in locale {d.locale!r}"
        )
    taxonomy = taxonomy or builtin_taxonomy()
    rng = random.Random(derive_seed(cs.seed, "template"))
    depth = {info.name: len(taxonomy.ancestors(info.name)) for info in taxonomy}
    units = plan_units(rng, cs.programmatic.entity_counts, cs.programmatic.excluded_labels, depth)
    doc = _render(rng, cs, units)
    text = doc.text
    entities = sorted({Entity(Span(s, e), label, None, text[s:e]) for s, e, label in doc.spans}, key=Entity.sort_key)
    return AnnotatedDocument(
        id=doc_id or f"synth-{cs.seed}",
        text=text,
        entities=tuple(entities),
        language=d.locale,
        metadata={
            "backend": "template",
            "document_type": d.document_type,
            "locale": d.locale,
            "mixed_language": str(d.mixed_language).lower(),
            "register": d.register,
            "seed": str(cs.seed),
            "tone": d.tone,
        },
    )
