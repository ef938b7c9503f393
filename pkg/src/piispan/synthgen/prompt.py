"""Deterministic prompt text for external generators."""

from __future__ import annotations

from ..taxonomy import Taxonomy, builtin_taxonomy
from .constraints import ConstraintSet

LANGUAGE_NAMES = {
    "en": "English",
    "fr": "French",
    "es": "Spanish",
    "de": "German",
    "it": "Italian",
    "pt": "Portuguese",
    "nl": "Dutch",
}

OUTPUT_CONTRACT = """\
Return a single JSON object and nothing else:
{"text": "<the document>", "entities": [{"label": "<label>", "start": <int>, "end": <int>, "text": "<exact substring>"}]}
Offsets are Unicode code point positions into "text"; "end" is exclusive.
Each entity's "text" must equal text[start:end] exactly, with no surrounding spaces or punctuation.
A value may carry several labels (for example a full name that is also a person); list each label as its own entity.
Annotate every occurrence of every labelled value."""


def render_prompt(
    cs: ConstraintSet,
    task_description: str,
    taxonomy: Taxonomy | None = None,
) -> str:
    """Same constraint set and task description always produce the same text."""
    taxonomy = taxonomy or builtin_taxonomy()
    d, p = cs.diversity, cs.programmatic
    language = LANGUAGE_NAMES.get(d.locale, d.locale)
    lines = [task_description.strip(), ""]
    lines.append(f"Document type: {d.document_type.replace('_', ' ')}")
    lines.append(f"Language: {language} ({d.locale})")
    lines.append(f"Register: {d.register}")
    lines.append(f"Tone: {d.tone}")
    if d.mixed_language:
        lines.append("Include one sentence written in a different language.")
    lines.append("")
    lines.append("Include at least one value for each of these labels:")
    for label in sorted(p.required_labels):
        lines.append(f"- {label}: {taxonomy.lookup(label).description}")
    bounded = [(label, b) for label, b in sorted(p.entity_counts.items())]
    if bounded:
        lines.append("")
        lines.append("Number of annotated values per label (min-max):")
        for label, (lo, hi) in bounded:
            lines.append(f"- {label}: {lo}-{hi}")
    if p.excluded_labels:
        lines.append("")
        lines.append("Do not include any value of these labels:")
        for label in sorted(p.excluded_labels):
            lines.append(f"- {label}")
    lines.append("")
    lines.append(OUTPUT_CONTRACT)
    return "\n".join(lines) + "\n"
