"""Client for an external text generator that follows the prompt contract.

Request body: ``{"prompt": str, "temperature": float, "seed": int}``.
Response body: ``{"text": str, "entities": [{"label", "start", "end", "text"}]}``.
The key in ``PIISPAN_GENERATOR_API_KEY`` is sent as a bearer token.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass

import requests

from ..core import AnnotatedDocument, Entity, Span, Violation, errors_only
from ..taxonomy import Taxonomy, builtin_taxonomy
from .constraints import ConstraintSet, GeneratorConfig, derive_seed, sample_constraints
from .prompt import render_prompt
from .validate import validate_example

logger = logging.getLogger(__name__)

GENERATOR_KEY_ENV = "PIISPAN_GENERATOR_API_KEY"


class ExternalGenerationError(RuntimeError):
    pass


class MissingCredentialsError(ExternalGenerationError):
    def __init__(self) -> None:
        super().__init__(f"external generator needs an API key in ${GENERATOR_KEY_ENV}")


@dataclass(frozen=True)
class GeneratedExample:
    document: AnnotatedDocument
    violations: tuple[Violation, ...]

    @property
    def accepted(self) -> bool:
        return not errors_only(self.violations)


def _parse(body: object, doc_id: str, cs: ConstraintSet) -> AnnotatedDocument:
    if not isinstance(body, dict) or not isinstance(body.get("text"), str) or not isinstance(body.get("entities"), list):
        raise ExternalGenerationError("response must be an object with 'text' and an 'entities' list")
    text = body["text"]
    entities: dict[tuple[int, int, str], Entity] = {}
    for i, item in enumerate(body["entities"]):
        if not isinstance(item, dict):
            raise ExternalGenerationError(f"entity {i} is not an object")
        label, start, end = item.get("label"), item.get("start"), item.get("end")
        if not isinstance(label, str) or type(start) is not int or type(end) is not int:
            raise ExternalGenerationError(f"entity {i}: needs a string label and integer start/end")
        if not 0 <= start < end <= len(text):
            raise ExternalGenerationError(f"entity {i}: span ({start}, {end}) outside text of length {len(text)}")
        surface = item.get("text")
        # a wrong surface is kept so validation can report it as a violation
        ent = Entity(Span(start, end), label, None, surface if isinstance(surface, str) else None)
        entities.setdefault(ent.key, ent)
    d = cs.diversity
    return AnnotatedDocument(
        id=doc_id,
        text=text,
        entities=tuple(sorted(entities.values(), key=Entity.sort_key)),
        language=d.locale,
        metadata={
            "backend": "external",
            "document_type": d.document_type,
            "locale": d.locale,
            "mixed_language": str(d.mixed_language).lower(),
            "register": d.register,
            "seed": str(cs.seed),
            "tone": d.tone,
        },
    )


def external_generate(
    cs: ConstraintSet,
    config: GeneratorConfig,
    doc_id: str | None = None,
    session: requests.Session | None = None,
    taxonomy: Taxonomy | None = None,
) -> GeneratedExample:
    """One request to the external generator, validated against ``cs``.

    Transport failures and unparseable responses raise; spans are never
    repaired or invented.
    """
    if not config.endpoint:
        raise ExternalGenerationError("no generator endpoint configured")
    key = os.environ.get(GENERATOR_KEY_ENV)
    if not key:
        raise MissingCredentialsError()
    taxonomy = taxonomy or builtin_taxonomy()
    payload = {
        "prompt": render_prompt(cs, config.task_description, taxonomy),
        "temperature": config.temperature,
        "seed": cs.seed,
    }
    headers = {"Authorization": f"Bearer {key}", "Content-Type": "application/json"}
    poster = session or requests
    try:
        resp = poster.post(config.endpoint, json=payload, headers=headers, timeout=config.timeout)
    except requests.RequestException as exc:
        raise ExternalGenerationError(f"{config.endpoint}: {exc}") from exc
    if resp.status_code >= 400:
        raise ExternalGenerationError(f"{config.endpoint}: HTTP {resp.status_code}")
    try:
        body = resp.json()
    except ValueError as exc:
        raise ExternalGenerationError(f"{config.endpoint}: response is not JSON") from exc
    doc = _parse(body, doc_id or f"synth-{cs.seed}", cs)
    return GeneratedExample(doc, tuple(validate_example(doc, cs, taxonomy)))


def generate_with_retries(
    cs: ConstraintSet,
    config: GeneratorConfig,
    doc_id: str | None = None,
    session: requests.Session | None = None,
    taxonomy: Taxonomy | None = None,
) -> GeneratedExample:
    """Retry rejected or failed generations with fresh seeds, up to ``config.max_retries`` attempts.

    Returns the first accepted example, or the last attempt if none passed.
    Missing credentials are not retried.
    """
    last: GeneratedExample | None = None
    error: ExternalGenerationError | None = None
    attempt_cs = cs
    for attempt in range(config.max_retries):
        if attempt:
            attempt_cs = sample_constraints(derive_seed(cs.seed, f"retry{attempt}"), config, taxonomy)
        try:
            last = external_generate(attempt_cs, config, doc_id, session, taxonomy)
        except MissingCredentialsError:
            raise
        except ExternalGenerationError as exc:
            logger.warning("generation attempt %d failed: %s", attempt + 1, exc)
            error = exc
            continue
        if last.accepted:
            return last
        logger.info("attempt %d rejected: %s", attempt + 1, [v.kind for v in errors_only(last.violations)])
    if last is None:
        raise ExternalGenerationError(f"all {config.max_retries} attempts failed") from error
    return last
