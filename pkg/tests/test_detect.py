from __future__ import annotations

import pytest

from piispan.core import SchemaError
from piispan.detect import (
    BackendDescriptor,
    BuiltinDetector,
    DetectionRequest,
    TextTooLongError,
    extract_entities,
    extract_many,
)
from piispan.detect.rules import ContextKeyword, DetectorRule

LISTING = "Email john.smith@acme.com or call +1 415 555 0199."


def _surfaces(entities):
    return {(e.label, e.surface) for e in entities}


def test_listing_example():
    found = extract_entities(DetectionRequest(LISTING, ["email", "phone_number", "person"], 0.5))
    assert ("email", "john.smith@acme.com") in _surfaces(found)
    assert ("phone_number", "+1 415 555 0199") in _surfaces(found)
    for e in found:
        assert LISTING[e.span.start : e.span.end] == e.surface


def test_label_conditioning():
    found = extract_entities(DetectionRequest(LISTING, ["email"], 0.0))
    assert {e.label for e in found} == {"email"}


def test_checksum_labels_and_parents():
    text = "Karte 4111 1111 1111 1111, IBAN DE89 3704 0044 0532 0130 00, routing 021000021."
    schema = ["card_number", "iban", "routing_number", "payment_card", "bank_account"]
    found = _surfaces(extract_entities(DetectionRequest(text, schema)))
    assert ("card_number", "4111 1111 1111 1111") in found
    assert ("payment_card", "4111 1111 1111 1111") in found
    assert ("iban", "DE89 3704 0044 0532 0130 00") in found
    assert ("routing_number", "021000021") in found


def test_bad_checksum_not_reported():
    text = "card 4111 1111 1111 1112"
    assert extract_entities(DetectionRequest(text, ["card_number"])) == []


@pytest.mark.parametrize("low,high", [(0.3, 0.7), (0.0, 0.5), (0.5, 0.95)])
def test_threshold_monotone(low, high):
    text = LISTING + " Password: hunter2! user: jdoe, born 12/03/1988, IP 10.0.0.12"
    schema = ["email", "phone_number", "password", "username", "date_of_birth", "ip_address"]
    lo = set(extract_entities(DetectionRequest(text, schema, low)))
    hi = set(extract_entities(DetectionRequest(text, schema, high)))
    assert {e.key for e in hi} <= {e.key for e in lo}
    assert all(e.confidence >= high for e in hi)


def test_results_sorted_and_confidence_optional():
    found = extract_entities(DetectionRequest(LISTING, ["email", "phone_number"], include_confidence=False))
    assert [e.span.start for e in found] == sorted(e.span.start for e in found)
    assert all(e.confidence is None for e in found)


def test_request_validation():
    with pytest.raises(SchemaError):
        DetectionRequest("x", [])
    with pytest.raises(ValueError):
        DetectionRequest("x", ["email"], 1.5)
    with pytest.raises(ValueError):
        BackendDescriptor(kind="remote")


def test_text_too_long():
    backend = BackendDescriptor(max_text_length=10)
    with pytest.raises(TextTooLongError):
        extract_entities(DetectionRequest("x" * 11, ["email"]), backend)


def test_extract_many_keeps_order():
    texts = [f"mail {i}@example.org" if i % 2 else "nothing here" for i in range(20)]
    serial = extract_many(texts, ["email"])
    parallel = extract_many(texts, ["email"], workers=4)
    assert serial == parallel
    assert [bool(r) for r in serial] == [bool(i % 2) for i in range(20)]


def test_context_boost_caps_at_one():
    rule = DetectorRule(
        name="t",
        label="username",
        pattern=r"\bx\d\b",
        base_confidence=0.8,
        context_keywords=(ContextKeyword("user", 20, 0.2),),
    )
    text = "user x1 and far away " + " " * 40 + "x2"
    hits = {e.surface: e.confidence for e in BuiltinDetector([rule]).detect(DetectionRequest(text, ["username"], 0.0))}
    assert hits["x1"] == 1.0 and hits["x2"] == 0.8


def test_detector_is_pure():
    req = DetectionRequest(LISTING, ["email", "phone_number"])
    assert extract_entities(req) == extract_entities(req)
