"""Canonical JSONL corpus format and importers for external span datasets.

One document per line::

    {"id": "doc-1", "text": "Call +1 415 555 0199.", "language": "en",
     "entities": [{"start": 5, "end": 20, "label": "phone_number",
                   "text": "+1 415 555 0199", "confidence": 0.9}],
     "metadata": {"source": "fixture"}}

Offsets count code points.  ``text`` inside an entity must equal the slice
it points at; ``confidence`` is omitted when unknown.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Iterator

import yaml

from .core import AnnotatedDocument, Entity, Span

logger = logging.getLogger(__name__)


class CorpusError(ValueError):
    def __init__(self, path: str | Path, line: int, message: str):
        self.path = str(path)
        self.line = line
        self.reason = message
        super().__init__(f"{path}:{line}: {message}")


def document_to_record(doc: AnnotatedDocument) -> dict:
    entities = []
    for ent in doc.entities:
        item = {"start": ent.start, "end": ent.end, "label": ent.label, "text": doc.text[ent.start : ent.end]}
        if ent.confidence is not None:
            item["confidence"] = ent.confidence
        entities.append(item)
    return {
        "id": doc.id,
        "text": doc.text,
        "language": doc.language,
        "entities": entities,
        "metadata": {k: doc.metadata[k] for k in sorted(doc.metadata)},
    }


def dumps_document(doc: AnnotatedDocument) -> str:
    return json.dumps(document_to_record(doc), ensure_ascii=False, separators=(", ", ": "))


def record_to_document(record: object, verify_surfaces: bool = True) -> AnnotatedDocument:
    """Build a document from a decoded record; raises ValueError on any defect."""
    if not isinstance(record, dict):
        raise ValueError("record must be a JSON object")
    for key in ("id", "text", "entities"):
        if key not in record:
            raise ValueError(f"missing field {key!r}")
    text = record["text"]
    if not isinstance(text, str) or not isinstance(record["id"], str):
        raise ValueError("'id' and 'text' must be strings")
    if not isinstance(record["entities"], list):
        raise ValueError("'entities' must be a list")
    entities = []
    for i, item in enumerate(record["entities"]):
        if not isinstance(item, dict):
            raise ValueError(f"entity {i} is not an object")
        for key in ("start", "end", "label", "text"):
            if key not in item:
                raise ValueError(f"entity {i}: missing field {key!r}")
        start, end = item["start"], item["end"]
        if type(start) is not int or type(end) is not int:
            raise ValueError(f"entity {i}: start/end must be integers")
        if not 0 <= start < end <= len(text):
            raise ValueError(f"entity {i}: span ({start}, {end}) outside text of length {len(text)}")
        if verify_surfaces and item["text"] != text[start:end]:
            raise ValueError(
                f"entity {i}: surface {item['text']!r} does not match text slice {text[start:end]!r}"
            )
        conf = item.get("confidence")
        entities.append(Entity(Span(start, end), str(item["label"]), conf, item["text"]))
    metadata = record.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ValueError("'metadata' must be an object")
    return AnnotatedDocument(
        id=record["id"],
        text=text,
        entities=tuple(entities),
        language=record.get("language"),
        metadata={str(k): str(v) for k, v in metadata.items()},
    )


def write_corpus(docs: Iterable[AnnotatedDocument], path: str | Path) -> int:
    """Stream documents to ``path``; returns the record count.

    Output bytes depend only on the documents (fixed key order, ``\\n`` line ends).
    """
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for doc in docs:
            fh.write(dumps_document(doc))
            fh.write("\n")
            count += 1
    return count


def read_corpus(
    path: str | Path,
    *,
    strict: bool = True,
    verify_surfaces: bool = True,
    errors: list[CorpusError] | None = None,
) -> Iterator[AnnotatedDocument]:
    """Yield documents in file order.

    In strict mode the first bad line raises :class:`CorpusError`.  In lenient
    mode bad lines are skipped, logged, and appended to ``errors`` if given.
    """
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                err = CorpusError(path, lineno, f"invalid UTF-8 ({exc.reason})")
            else:
                try:
                    yield record_to_document(json.loads(line), verify_surfaces)
                    continue
                except json.JSONDecodeError as exc:
                    err = CorpusError(path, lineno, f"malformed JSON ({exc.msg})")
                except (ValueError, TypeError) as exc:
                    err = CorpusError(path, lineno, str(exc))
            if strict:
                raise err
            logger.warning("%s", err)
            if errors is not None:
                errors.append(err)


OFFSET_UNITS = ("char", "byte", "utf16")


class ImportProfileError(ValueError):
    pass


@dataclass(frozen=True)
class FieldProfile:
    """Field names and offset convention of an external span dataset (JSON lines)."""

    id_field: str = "id"
    text_field: str = "text"
    entities_field: str = "entities"
    start_field: str = "start"
    end_field: str = "end"
    label_field: str = "label"
    language_field: str | None = None
    offset_unit: str = "char"

    def __post_init__(self) -> None:
        if self.offset_unit not in OFFSET_UNITS:
            raise ImportProfileError(f"offset_unit must be one of {OFFSET_UNITS}, got {self.offset_unit!r}")

    @classmethod
    def load(cls, path: str | Path) -> FieldProfile:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
        if not isinstance(data, dict):
            raise ImportProfileError(f"{path}: profile must be a mapping")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ImportProfileError(f"{path}: unknown profile fields {sorted(unknown)}")
        return cls(**data)


def _unit_to_char(text: str, offset: int, unit: str) -> int:
    if unit == "char":
        return offset
    if unit == "byte":
        encoded = text.encode("utf-8")
        codec, width = "utf-8", 1
    else:
        encoded = text.encode("utf-16-le")
        codec, width = "utf-16-le", 2
    if not 0 <= offset * width <= len(encoded):
        raise ValueError(f"{unit} offset {offset} outside text")
    try:
        return len(encoded[: offset * width].decode(codec))
    except UnicodeDecodeError:
        raise ValueError(f"{unit} offset {offset} splits a character") from None


def import_external(path: str | Path, profile: FieldProfile) -> Iterator[AnnotatedDocument]:
    """Convert an external JSONL file to canonical documents.

    Every source entity becomes one entity; an entity that cannot be
    converted fails the import rather than being dropped.
    """
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(path, lineno, f"malformed JSON ({exc.msg})") from exc
            yield _import_record(path, lineno, record, profile)


def _import_record(path, lineno: int, record: object, profile: FieldProfile) -> AnnotatedDocument:
    def need(obj: dict, name: str, where: str):
        if name not in obj:
            raise CorpusError(path, lineno, f"{where}missing field {name!r}")
        return obj[name]

    if not isinstance(record, dict):
        raise CorpusError(path, lineno, "record must be a JSON object")
    text = need(record, profile.text_field, "")
    doc_id = str(need(record, profile.id_field, ""))
    raw_entities = need(record, profile.entities_field, "")
    if not isinstance(text, str) or not isinstance(raw_entities, list):
        raise CorpusError(path, lineno, "text must be a string and entities a list")
    entities = []
    for i, item in enumerate(raw_entities):
        if not isinstance(item, dict):
            raise CorpusError(path, lineno, f"entity {i} is not an object")
        label = need(item, profile.label_field, f"entity {i}: ")
        start = need(item, profile.start_field, f"entity {i}: ")
        end = need(item, profile.end_field, f"entity {i}: ")
        try:
            s = _unit_to_char(text, int(start), profile.offset_unit)
            e = _unit_to_char(text, int(end), profile.offset_unit)
            entities.append(Entity(Span(s, e), str(label), None, text[s:e]))
        except (ValueError, TypeError) as exc:
            raise CorpusError(path, lineno, f"entity {i}: offset transcoding failed: {exc}") from exc
    language = record.get(profile.language_field) if profile.language_field else None
    try:
        return AnnotatedDocument(doc_id, text, tuple(entities), language)
    except ValueError as exc:
        raise CorpusError(path, lineno, str(exc)) from exc
