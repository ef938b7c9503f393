"""Sampling of per-example label and surface-form constraints."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import Mapping

from ..resources import LOCALES
from ..taxonomy import Taxonomy, builtin_taxonomy
from .units import UNITS, units_for

DOCUMENT_TYPES = (
    "chat_log",
    "support_ticket",
    "crm_note",
    "kyc_form",
    "invoice",
    "medical_record",
    "credential_file",
)
REGISTERS = ("formal", "informal")
TONES = ("neutral", "friendly", "urgent", "apologetic")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ProgrammaticConstraint:
    entity_counts: Mapping[str, tuple[int, int]]
    excluded_labels: frozenset[str] = frozenset()
    required_labels: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entity_counts", {k: tuple(v) for k, v in self.entity_counts.items()})
        object.__setattr__(self, "excluded_labels", frozenset(self.excluded_labels))
        object.__setattr__(self, "required_labels", frozenset(self.required_labels))
        overlap = self.required_labels & self.excluded_labels
        if overlap:
            raise ConfigError(f"labels both required and excluded: {sorted(overlap)}")
        for label, (lo, hi) in self.entity_counts.items():
            if not 0 <= lo <= hi:
                raise ConfigError(f"bad count bounds for {label}: ({lo}, {hi})")

    def check_labels(self, taxonomy: Taxonomy) -> None:
        labels = set(self.entity_counts) | self.excluded_labels | self.required_labels
        unknown = sorted(label for label in labels if label not in taxonomy)
        if unknown:
            raise ConfigError(f"labels not in taxonomy: {unknown}")


@dataclass(frozen=True)
class DiversityConstraint:
    document_type: str
    locale: str
    register: str = "formal"
    tone: str = "neutral"
    mixed_language: bool = False


@dataclass(frozen=True)
class ConstraintSet:
    programmatic: ProgrammaticConstraint
    diversity: DiversityConstraint
    seed: int


@dataclass(frozen=True)
class GeneratorConfig:
    backend: str = "template"
    temperature: float = 0.01
    target_corpus_size: int = 100
    locale_weights: Mapping[str, float] = field(default_factory=lambda: {loc: 1.0 for loc in LOCALES})
    document_type_weights: Mapping[str, float] = field(default_factory=lambda: {d: 1.0 for d in DOCUMENT_TYPES})
    registers: tuple[str, ...] = REGISTERS
    tones: tuple[str, ...] = TONES
    mixed_language_rate: float = 0.05
    required_range: tuple[int, int] = (2, 8)
    count_max: int = 3
    excluded_range: tuple[int, int] = (0, 4)
    optional_range: tuple[int, int] = (0, 2)
    endpoint: str | None = None
    timeout: float = 120.0
    max_retries: int = 3
    max_in_flight: int = 4
    task_description: str = (
        "Write realistic documents containing personally identifiable information "
        "and annotate every PII value with its label and exact character span."
    )

    def __post_init__(self) -> None:
        if self.backend not in ("template", "external"):
            raise ConfigError(f"unknown backend {self.backend!r}")
        for name, weights in (("locale", self.locale_weights), ("document type", self.document_type_weights)):
            if not weights:
                raise ConfigError(f"empty {name} vocabulary")
            if any(w < 0 for w in weights.values()) or not any(w > 0 for w in weights.values()):
                raise ConfigError(f"{name} weights must be non-negative and not all zero")
        if not self.registers or not self.tones:
            raise ConfigError("empty register or tone vocabulary")
        lo, hi = self.required_range
        if not 1 <= lo <= hi:
            raise ConfigError(f"bad required_range {self.required_range}")
        if self.count_max < 1:
            raise ConfigError("count_max must be at least 1")
        if not 0.0 <= self.mixed_language_rate <= 1.0:
            raise ConfigError("mixed_language_rate must be in [0, 1]")
        if self.target_corpus_size < 0:
            raise ConfigError("target_corpus_size must be non-negative")
        if self.max_retries < 1:
            raise ConfigError("max_retries must be at least 1")
        object.__setattr__(self, "locale_weights", dict(self.locale_weights))
        object.__setattr__(self, "document_type_weights", dict(self.document_type_weights))


def derive_seed(seed: int | str, index: int | str) -> int:
    """Stable 63-bit child seed, independent of PYTHONHASHSEED."""
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


def _weighted(rng: random.Random, weights: Mapping[str, float]) -> str:
    keys = sorted(k for k, w in weights.items() if w > 0)
    return rng.choices(keys, weights=[weights[k] for k in keys])[0]


def _feasible(label: str, excluded: set[str]) -> bool:
    return any(not (unit.labels & excluded) for unit in units_for(label))


def sample_constraints(
    seed: int,
    config: GeneratorConfig | None = None,
    taxonomy: Taxonomy | None = None,
) -> ConstraintSet:
    """Draw one ConstraintSet; the same (seed, config) always gives the same result."""
    config = config or GeneratorConfig()
    taxonomy = taxonomy or builtin_taxonomy()
    rng = random.Random(derive_seed(seed, "constraints"))
    labels = [label for label in taxonomy.names if units_for(label)]

    lo, hi = config.required_range
    k = min(rng.randint(lo, hi), len(labels))
    required = set(rng.sample(labels, k))

    rest = [label for label in labels if label not in required]
    rng.shuffle(rest)
    n_excluded = rng.randint(*config.excluded_range)
    excluded: set[str] = set()
    for label in rest:
        if len(excluded) >= n_excluded:
            break
        trial = excluded | {label}
        if all(_feasible(r, trial) for r in required):
            excluded = trial

    counts: dict[str, tuple[int, int]] = {}
    for label in sorted(required):
        counts[label] = (1, rng.randint(1, config.count_max))
    optional_pool = sorted(label for label in rest if label not in excluded)
    n_optional = min(rng.randint(*config.optional_range), len(optional_pool))
    for label in rng.sample(optional_pool, n_optional):
        counts[label] = (0, rng.randint(1, config.count_max))

    diversity = DiversityConstraint(
        document_type=_weighted(rng, config.document_type_weights),
        locale=_weighted(rng, config.locale_weights),
        register=rng.choice(sorted(config.registers)),
        tone=rng.choice(sorted(config.tones)),
        mixed_language=rng.random() < config.mixed_language_rate,
    )
    programmatic = ProgrammaticConstraint(counts, frozenset(excluded), frozenset(required))
    programmatic.check_labels(taxonomy)
    return ConstraintSet(programmatic, diversity, int(seed))


__all__ = [
    "DOCUMENT_TYPES",
    "REGISTERS",
    "TONES",
    "UNITS",
    "ConfigError",
    "ConstraintSet",
    "DiversityConstraint",
    "GeneratorConfig",
    "ProgrammaticConstraint",
    "derive_seed",
    "sample_constraints",
]
