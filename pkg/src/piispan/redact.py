"""Policy-driven masking of detected spans, with nested-span granularity control."""

from __future__ import annotations

import bisect
import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import yaml

from .core import Entity, Span, SpanRelation, span_relation
from .taxonomy import GROUPS, Taxonomy, builtin_taxonomy

ACTIONS = ("mask_full", "placeholder", "hash", "keep")
GRANULARITIES = ("outer_conservative", "inner_surgical")

# highest risk first; labels outside the taxonomy rank below all groups
DEFAULT_PRIORITY = (
    "secrets_credentials",
    "banking_payment",
    "government_tax",
    "digital_identity",
    "person_identity",
    "contact_location",
    "sensitive_dates",
)


class PolicyError(ValueError):
    pass


class PlanContractError(ValueError):
    """A mask plan with overlapping or out-of-bounds spans reached apply_masks."""


@dataclass(frozen=True)
class RedactionPolicy:
    actions: Mapping[str, str] = field(default_factory=dict)
    granularity: str = "outer_conservative"
    default_action: str = "mask_full"
    placeholder_format: str = "[{LABEL_UPPER}]"
    mask_char: str = "█"
    # None means length-preserving
    mask_length: int | None = 6
    hash_salt: str = ""
    hash_length: int = 12
    priority: tuple[str, ...] = DEFAULT_PRIORITY

    def __post_init__(self) -> None:
        for label, action in self.actions.items():
            if action not in ACTIONS:
                raise PolicyError(f"label {label!r}: unknown action {action!r}")
        if self.default_action not in ACTIONS:
            raise PolicyError(f"unknown default action {self.default_action!r}")
        if self.granularity not in GRANULARITIES:
            raise PolicyError(f"unknown granularity {self.granularity!r}")
        if len(self.mask_char) != 1:
            raise PolicyError("mask_char must be a single character")
        if self.mask_length is not None and self.mask_length <= 0:
            raise PolicyError("mask_length must be positive")
        if not 4 <= self.hash_length <= 64:
            raise PolicyError("hash_length must be within 4..64")
        unknown = [g for g in self.priority if g not in GROUPS]
        if unknown:
            raise PolicyError(f"unknown groups in priority: {unknown}")
        try:
            self.placeholder_format.format(LABEL_UPPER="X", label="x")
        except (KeyError, IndexError, ValueError) as exc:
            raise PolicyError(f"bad placeholder_format {self.placeholder_format!r}: {exc}") from exc
        object.__setattr__(self, "actions", dict(self.actions))
        object.__setattr__(self, "priority", tuple(self.priority))

    def action_for(self, label: str) -> str:
        return self.actions.get(label, self.default_action)

    def placeholder(self, label: str) -> str:
        return self.placeholder_format.format(LABEL_UPPER=label.upper(), label=label)

    def digest(self, surface: str) -> str:
        return hashlib.sha256((self.hash_salt + surface).encode("utf-8")).hexdigest()[: self.hash_length]

    def replacement(self, action: str, label: str, surface: str) -> str:
        if action == "mask_full":
            return self.mask_char * (self.mask_length or len(surface))
        if action == "placeholder":
            return self.placeholder(label)
        if action == "hash":
            return self.digest(surface)
        raise PolicyError(f"action {action!r} produces no replacement")

    @classmethod
    def mask_all(cls, granularity: str = "outer_conservative", **kw) -> RedactionPolicy:
        return cls(granularity=granularity, default_action="mask_full", **kw)

    @classmethod
    def keep_all(cls) -> RedactionPolicy:
        return cls(default_action="keep")


_POLICY_KEYS = {
    "actions",
    "granularity",
    "default_action",
    "placeholder_format",
    "mask_char",
    "mask_length",
    "hash_salt",
    "hash_length",
    "priority",
}


def load_policy(path: str | Path) -> RedactionPolicy:
    """Read a YAML policy file. See ``docs/policy.example.yaml`` for every key."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
    except yaml.YAMLError as exc:
        raise PolicyError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise PolicyError(f"{path}: policy must be a mapping")
    unknown = set(data) - _POLICY_KEYS
    if unknown:
        raise PolicyError(f"{path}: unknown policy keys {sorted(unknown)}")
    actions = data.get("actions") or {}
    if not isinstance(actions, dict):
        raise PolicyError(f"{path}: 'actions' must map labels to actions")
    kwargs = {k: v for k, v in data.items() if k != "actions"}
    if "priority" in kwargs:
        kwargs["priority"] = tuple(kwargs["priority"])
    try:
        return RedactionPolicy(actions={str(k): str(v) for k, v in actions.items()}, **kwargs)
    except TypeError as exc:
        raise PolicyError(f"{path}: {exc}") from exc


@dataclass(frozen=True)
class MaskEntry:
    span: Span
    action: str
    label: str


@dataclass(frozen=True)
class MaskPlan:
    entries: tuple[MaskEntry, ...] = ()
    document_id: str | None = None
    audit: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        object.__setattr__(self, "audit", tuple(self.audit))

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class _Node:
    span: Span
    label: str
    action: str
    rank: int


def _rank(label: str, policy: RedactionPolicy, taxonomy: Taxonomy) -> int:
    if label in taxonomy:
        group = taxonomy.group_of(label)
        if group in policy.priority:
            return policy.priority.index(group)
    return len(policy.priority)


def plan_redaction(
    entities: Sequence[Entity],
    policy: RedactionPolicy,
    taxonomy: Taxonomy | None = None,
    document_id: str | None = None,
) -> MaskPlan:
    """Resolve possibly nested or crossing entities into disjoint masks.

    Crossing spans are first unioned under the higher-priority label.  Then
    ``outer_conservative`` keeps the outermost masked span of every nest and
    ``inner_surgical`` keeps the innermost ones, leaving the rest of the
    outer span readable.
    """
    taxonomy = taxonomy or builtin_taxonomy()
    audit: list[str] = []
    nodes = [
        _Node(e.span, e.label, policy.action_for(e.label), _rank(e.label, policy, taxonomy))
        for e in entities
    ]
    masked = [n for n in nodes if n.action != "keep"]
    kept = [n for n in nodes if n.action == "keep"]

    merged = True
    while merged:
        merged = False
        masked.sort(key=lambda n: (n.span.start, -n.span.end, n.rank, n.label))
        for i in range(len(masked)):
            for j in range(i + 1, len(masked)):
                a, b = masked[i], masked[j]
                if b.span.start >= a.span.end:
                    break
                if span_relation(a.span, b.span) is SpanRelation.CROSSING:
                    win = min((a, b), key=lambda n: (n.rank, n.label))
                    union = Span(min(a.span.start, b.span.start), max(a.span.end, b.span.end))
                    audit.append(
                        f"crossing {a.label}{(a.span.start, a.span.end)} and {b.label}{(b.span.start, b.span.end)} "
                        f"merged into {win.label}{(union.start, union.end)}"
                    )
                    masked[i] = _Node(union, win.label, win.action, win.rank)
                    del masked[j]
                    merged = True
                    break
            if merged:
                break

    # identical spans: the higher-priority label speaks for the span
    by_span: dict[Span, _Node] = {}
    for n in sorted(masked, key=lambda n: (n.rank, n.label)):
        by_span.setdefault(n.span, n)
    laminar = list(by_span.values())

    if policy.granularity == "outer_conservative":
        chosen = [n for n in laminar if not any(o is not n and o.span.contains(n.span) for o in laminar)]
        for k in kept:
            for n in chosen:
                if n.span.overlaps(k.span):
                    audit.append(
                        f"keep {k.label}{(k.span.start, k.span.end)} overridden by {n.action} "
                        f"{n.label}{(n.span.start, n.span.end)}"
                    )
                    break
    else:
        chosen = [n for n in laminar if not any(o is not n and n.span.contains(o.span) for o in laminar)]
        for n in laminar:
            if n not in chosen:
                audit.append(
                    f"{n.label}{(n.span.start, n.span.end)} split; only nested spans masked"
                )

    chosen.sort(key=lambda n: n.span.start)
    entries = tuple(MaskEntry(n.span, n.action, n.label) for n in chosen)
    return MaskPlan(entries, document_id, tuple(audit))


class OffsetMap:
    """Monotone map from original offsets to redacted offsets.

    Offsets inside a replaced span map to the start of its replacement;
    the end of a replaced span maps to the end of its replacement.
    """

    def __init__(self, segments: Sequence[tuple[int, int, int, int]], original_length: int, redacted_length: int):
        # (orig_start, orig_end, new_start, new_end) for each replaced span
        self.segments = tuple(segments)
        self.original_length = original_length
        self.redacted_length = redacted_length
        self._starts = [s[0] for s in self.segments]

    def __call__(self, offset: int) -> int:
        if not 0 <= offset <= self.original_length:
            raise IndexError(f"offset {offset} outside [0, {self.original_length}]")
        i = bisect.bisect_right(self._starts, offset) - 1
        if i < 0:
            return offset
        o_start, o_end, n_start, n_end = self.segments[i]
        if offset < o_end:
            return n_start
        return n_end + (offset - o_end)

    def is_identity(self) -> bool:
        return all(o_end - o_start == n_end - n_start for o_start, o_end, n_start, n_end in self.segments) and (
            self.original_length == self.redacted_length
        )


@dataclass(frozen=True)
class AppliedMask:
    span: Span
    label: str
    action: str
    replacement: str


@dataclass(frozen=True)
class RedactionResult:
    redacted_text: str
    offset_map: OffsetMap
    applied: tuple[AppliedMask, ...]


def apply_masks(text: str, plan: MaskPlan, policy: RedactionPolicy) -> RedactionResult:
    pieces: list[str] = []
    segments = []
    applied = []
    cursor = 0
    new_len = 0
    for entry in plan.entries:
        s, e = entry.span.start, entry.span.end
        if s < cursor:
            raise PlanContractError(f"plan spans overlap or are unsorted at ({s}, {e})")
        if e > len(text):
            raise PlanContractError(f"plan span ({s}, {e}) beyond text length {len(text)}")
        if entry.action == "keep":
            continue
        pieces.append(text[cursor:s])
        new_len += s - cursor
        repl = policy.replacement(entry.action, entry.label, text[s:e])
        segments.append((s, e, new_len, new_len + len(repl)))
        pieces.append(repl)
        new_len += len(repl)
        applied.append(AppliedMask(entry.span, entry.label, entry.action, repl))
        cursor = e
    pieces.append(text[cursor:])
    new_len += len(text) - cursor
    redacted = "".join(pieces)
    return RedactionResult(redacted, OffsetMap(segments, len(text), new_len), tuple(applied))


def redact(
    text: str,
    entities: Iterable[Entity],
    policy: RedactionPolicy,
    taxonomy: Taxonomy | None = None,
) -> RedactionResult:
    plan = plan_redaction(list(entities), policy, taxonomy)
    return apply_masks(text, plan, policy)


def unmasked_segments(text: str, spans: Iterable[Span]) -> list[str]:
    """Pieces of ``text`` between the given disjoint, sorted spans."""
    out, cursor = [], 0
    for span in spans:
        out.append(text[cursor : span.start])
        cursor = span.end
    out.append(text[cursor:])
    return out
