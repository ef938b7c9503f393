"""Check a generated example against the constraint set it was made from."""

from __future__ import annotations

from collections import Counter

from ..core import AnnotatedDocument, Violation, validate_document
from ..taxonomy import Taxonomy, builtin_taxonomy
from .constraints import ConstraintSet


def validate_example(
    doc: AnnotatedDocument,
    cs: ConstraintSet,
    taxonomy: Taxonomy | None = None,
) -> list[Violation]:
    """Return every violation; an empty list means the example is accepted.

    Besides the annotation invariants this checks per-label count bounds,
    that every required label occurs, and that no excluded label occurs.
    """
    taxonomy = taxonomy or builtin_taxonomy()
    out = validate_document(doc, taxonomy, strict=True)
    counts = Counter(e.label for e in doc.entities)
    prog = cs.programmatic
    for label in sorted(prog.required_labels):
        if counts[label] == 0:
            out.append(Violation("at_least_one_unmet", f"required label {label!r} does not occur"))
    for label, (lo, hi) in sorted(prog.entity_counts.items()):
        n = counts[label]
        if n > hi:
            out.append(Violation("count_exceeded", f"{label!r} occurs {n} times, maximum is {hi}"))
        elif n < lo and not (n == 0 and label in prog.required_labels):  # n == 0 reported above
            out.append(Violation("count_below_min", f"{label!r} occurs {n} times, minimum is {lo}"))
    for ent in doc.entities:
        if ent.label in prog.excluded_labels:
            out.append(Violation("exclusion_breach", f"{ent.key}: label {ent.label!r} is excluded", entity=ent))
    return out
