"""Corpus-level generation with coverage accounting."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from ..core import AnnotatedDocument
from ..taxonomy import Taxonomy, builtin_taxonomy
from .constraints import GeneratorConfig, derive_seed, sample_constraints
from .templates import generate_template


@dataclass
class Coverage:
    labels: Counter = field(default_factory=Counter)
    locales: Counter = field(default_factory=Counter)
    document_types: Counter = field(default_factory=Counter)
    documents: int = 0

    def add(self, doc: AnnotatedDocument) -> None:
        self.documents += 1
        self.labels.update(e.label for e in doc.entities)
        self.locales[doc.metadata.get("locale")] += 1
        self.document_types[doc.metadata.get("document_type")] += 1

    def missing_labels(self, taxonomy: Taxonomy) -> list[str]:
        return [name for name in taxonomy.names if not self.labels[name]]

    def summary(self) -> dict:
        return {
            "documents": self.documents,
            "labels": dict(sorted(self.labels.items())),
            "locales": dict(sorted(self.locales.items())),
            "document_types": dict(sorted(self.document_types.items())),
        }


def document_seed(seed: int, index: int) -> int:
    return derive_seed(seed, index)


def generate_corpus(
    size: int,
    seed: int,
    config: GeneratorConfig | None = None,
    taxonomy: Taxonomy | None = None,
    workers: int = 1,
) -> Iterator[AnnotatedDocument]:
    """Yield ``size`` template documents; output depends only on (size, seed, config)."""
    config = config or GeneratorConfig()
    taxonomy = taxonomy or builtin_taxonomy()

    def make(i: int) -> AnnotatedDocument:
        cs = sample_constraints(document_seed(seed, i), config, taxonomy)
        return generate_template(cs, f"gen-{seed}-{i:05d}", taxonomy)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(make, range(size))
    else:
        for i in range(size):
            yield make(i)
