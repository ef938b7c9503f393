"""Deterministic projection of a model's labels onto a benchmark's label set."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import yaml

from .core import Entity, Schema, sort_entities

DROP = "drop"


class MappingError(ValueError):
    pass


class UnmappedLabelError(MappingError, KeyError):
    def __init__(self, labels: Iterable[str], map_name: str = ""):
        self.labels = tuple(sorted(set(labels)))
        where = f" in map {map_name!r}" if map_name else ""
        super().__init__(f"unmapped source labels{where}: {', '.join(self.labels)}")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class LabelMap:
    """Total function from declared source labels to target labels or ``DROP``."""

    name: str
    entries: Mapping[str, str]
    target_schema: Schema

    def __post_init__(self) -> None:
        entries = dict(self.entries)
        bad = {src: tgt for src, tgt in entries.items() if tgt != DROP and tgt not in self.target_schema}
        if bad:
            raise MappingError(
                f"map {self.name!r}: targets outside the target schema: "
                + ", ".join(f"{s}->{t}" for s, t in sorted(bad.items()))
            )
        object.__setattr__(self, "entries", entries)

    @property
    def sources(self) -> frozenset[str]:
        return frozenset(self.entries)

    def target(self, label: str) -> str:
        try:
            return self.entries[label]
        except KeyError:
            raise UnmappedLabelError([label], self.name) from None

    def check_total(self, source: Schema | Iterable[str]) -> None:
        """Fail fast if any label of ``source`` has no entry."""
        labels = source.labels if isinstance(source, Schema) else tuple(source)
        missing = [label for label in labels if label not in self.entries]
        if missing:
            raise UnmappedLabelError(missing, self.name)

    @classmethod
    def identity(cls, labels: Iterable[str], name: str = "identity") -> LabelMap:
        labels = list(labels)
        return cls(name, {label: label for label in labels}, Schema.from_labels(labels))

    def extended_with_identity(self) -> LabelMap:
        """This map plus ``t -> t`` for every target label not already a source."""
        entries = dict(self.entries)
        for t in self.target_schema.labels:
            entries.setdefault(t, t)
        return LabelMap(self.name, entries, self.target_schema)


def map_entities(entities: Sequence[Entity], label_map: LabelMap) -> list[Entity]:
    """Relabel, drop, and merge entities that collapse onto the same (span, label)."""
    missing = {e.label for e in entities if e.label not in label_map.entries}
    if missing:
        raise UnmappedLabelError(missing, label_map.name)
    merged: dict[tuple[int, int, str], Entity] = {}
    for ent in entities:
        target = label_map.entries[ent.label]
        if target == DROP:
            continue
        new = Entity(ent.span, target, ent.confidence, ent.surface)
        prev = merged.get(new.key)
        if prev is None or _conf(new) > _conf(prev):
            merged[new.key] = new
    return sort_entities(merged.values())


def _conf(e: Entity) -> float:
    return -1.0 if e.confidence is None else e.confidence


_MAP_KEYS = {"name", "targets", "map"}


def load_label_map(path: str | Path, source: Schema | Iterable[str] | None = None) -> LabelMap:
    """Load a YAML map: ``name``, ``targets`` (list) and ``map`` (source -> target or drop).

    When ``source`` is given the map must cover every one of its labels.
    """
    with open(path, encoding="utf-8") as fh:
        try:
            data = yaml.safe_load(fh) or {}
        except yaml.YAMLError as exc:
            raise MappingError(f"{path}: {exc}") from exc
    return label_map_from_dict(data, source, origin=str(path))


def label_map_from_dict(
    data: object, source: Schema | Iterable[str] | None = None, origin: str = "<dict>"
) -> LabelMap:
    if not isinstance(data, dict):
        raise MappingError(f"{origin}: label map must be a mapping")
    unknown = set(data) - _MAP_KEYS
    if unknown:
        raise MappingError(f"{origin}: unknown keys {sorted(unknown)}")
    targets = data.get("targets")
    pairs = data.get("map")
    if not isinstance(targets, list) or not targets:
        raise MappingError(f"{origin}: 'targets' must be a non-empty list")
    if not isinstance(pairs, dict):
        raise MappingError(f"{origin}: 'map' must map source labels to targets")
    entries = {str(k): (DROP if v is None else str(v)) for k, v in pairs.items()}
    label_map = LabelMap(str(data.get("name", Path(origin).stem)), entries, Schema.from_labels(map(str, targets)))
    if source is not None:
        label_map.check_total(source)
    return label_map


def default_spy_map() -> LabelMap:
    """Shipped stand-in map from the 42-label inventory to seven benchmark classes."""
    text = resources.files("piispan.data").joinpath("spy_map.yaml").read_text(encoding="utf-8")
    return label_map_from_dict(yaml.safe_load(text), origin="spy_map.yaml")
