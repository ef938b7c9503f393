"""HTTP client for external span extractors.

Wire format, request::

    {"text": str, "labels": [str], "threshold": float,
     "include_confidence": bool, "include_spans": bool}

response::

    {"entities": [{"label": str, "start": int, "end": int,
                   "text": str, "confidence": float?}]}

Offsets are code-point offsets into ``text``.  A bearer token is sent when
``PIISPAN_DETECTOR_API_KEY`` is set.
"""

from __future__ import annotations

import os
import warnings

import requests

from ..core import Entity, Span, sort_entities
from .engine import (
    BackendDescriptor,
    DetectionRequest,
    RemoteMalformedResponseError,
    RemoteUnreachableError,
)

API_KEY_ENV = "PIISPAN_DETECTOR_API_KEY"


class RemoteResponseWarning(UserWarning):
    pass


def build_payload(req: DetectionRequest) -> dict:
    return {
        "text": req.text,
        "labels": list(req.schema.labels),
        "threshold": req.threshold,
        "include_confidence": req.include_confidence,
        "include_spans": req.include_spans,
    }


def parse_response(req: DetectionRequest, body: object) -> list[Entity]:
    """Validate a decoded response body against the request; raise on any defect."""
    if not isinstance(body, dict) or not isinstance(body.get("entities"), list):
        raise RemoteMalformedResponseError("response must be an object with an 'entities' list")
    text = req.text
    labels = set(req.schema.labels)
    out: dict[tuple[int, int, str], Entity] = {}
    for i, item in enumerate(body["entities"]):
        if not isinstance(item, dict):
            raise RemoteMalformedResponseError(f"entity {i} is not an object")
        label, start, end = item.get("label"), item.get("start"), item.get("end")
        if not isinstance(label, str):
            raise RemoteMalformedResponseError(f"entity {i}: missing or non-string label")
        if label not in labels:
            raise RemoteMalformedResponseError(f"entity {i}: label {label!r} not in request schema")
        if type(start) is not int or type(end) is not int:
            raise RemoteMalformedResponseError(f"entity {i}: start/end must be integers")
        if not 0 <= start < end <= len(text):
            raise RemoteMalformedResponseError(
                f"entity {i}: span ({start}, {end}) outside text of length {len(text)}"
            )
        surface = text[start:end]
        if "text" in item and item["text"] != surface:
            raise RemoteMalformedResponseError(
                f"entity {i}: text {item['text']!r} does not match slice {surface!r}"
            )
        conf = item.get("confidence")
        if conf is None:
            if req.include_confidence:
                warnings.warn(
                    f"entity {i} ({label} {start}:{end}) has no confidence", RemoteResponseWarning, stacklevel=2
                )
        elif isinstance(conf, bool) or not isinstance(conf, (int, float)) or not 0.0 <= conf <= 1.0:
            raise RemoteMalformedResponseError(f"entity {i}: confidence {conf!r} not a number in [0, 1]")
        else:
            conf = float(conf)
            if conf < req.threshold:
                continue
        if not req.include_confidence:
            conf = None
        ent = Entity(Span(start, end), label, conf, surface)
        prev = out.get(ent.key)
        if prev is None or (ent.confidence or 0.0) > (prev.confidence or 0.0):
            out[ent.key] = ent
    return sort_entities(out.values())


def remote_extract(
    req: DetectionRequest,
    backend: BackendDescriptor,
    session: requests.Session | None = None,
) -> list[Entity]:
    if backend.kind != "remote":
        raise ValueError("remote_extract needs a remote backend")
    headers = {"Content-Type": "application/json"}
    token = os.environ.get(API_KEY_ENV)
    if token:
        headers["Authorization"] = f"Bearer {token}"
    poster = session or requests
    try:
        resp = poster.post(backend.endpoint, json=build_payload(req), headers=headers, timeout=backend.timeout)
    except requests.RequestException as exc:
        raise RemoteUnreachableError(f"{backend.endpoint}: {exc}") from exc
    if resp.status_code >= 500:
        raise RemoteUnreachableError(f"{backend.endpoint}: HTTP {resp.status_code}")
    if resp.status_code >= 400:
        raise RemoteMalformedResponseError(f"{backend.endpoint}: HTTP {resp.status_code}: {resp.text[:200]}")
    try:
        body = resp.json()
    except ValueError as exc:
        raise RemoteMalformedResponseError(f"{backend.endpoint}: response is not JSON") from exc
    return parse_response(req, body)
