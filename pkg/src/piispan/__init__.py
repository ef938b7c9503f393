"""PII span detection, redaction, label mapping, evaluation and synthetic corpora."""

from .core import (
    AnnotatedDocument,
    Entity,
    Schema,
    Span,
    SpanRelation,
    Violation,
    span_relation,
    validate_document,
)
from .taxonomy import LabelInfo, Taxonomy, UnknownLabelError, builtin_taxonomy

__version__ = "0.1.0"

__all__ = [
    "AnnotatedDocument",
    "Entity",
    "LabelInfo",
    "Schema",
    "Span",
    "SpanRelation",
    "Taxonomy",
    "UnknownLabelError",
    "Violation",
    "builtin_taxonomy",
    "span_relation",
    "validate_document",
]
