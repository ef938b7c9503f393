from __future__ import annotations

import pytest

from piispan.core import Entity, Span
from piispan.redact import (
    MaskEntry,
    MaskPlan,
    PlanContractError,
    PolicyError,
    RedactionPolicy,
    apply_masks,
    load_policy,
    plan_redaction,
    redact,
    unmasked_segments,
)

NAME_TEXT = "Anna Weber signed."
NAME_NEST = [
    Entity.at(0, 10, "full_name", text=NAME_TEXT),
    Entity.at(0, 4, "first_name", text=NAME_TEXT),
    Entity.at(5, 10, "last_name", text=NAME_TEXT),
]
URL_TEXT = "Reset via https://auth.example.com/reset?token=eyJhbGciOi.abc now"
URL_START = URL_TEXT.index("https")
URL_END = URL_TEXT.index(" now")
TOKEN_START = URL_TEXT.index("eyJ")
URL_NEST = [
    Entity.at(URL_START, URL_END, "url", text=URL_TEXT),
    Entity.at(TOKEN_START, URL_END, "access_token", text=URL_TEXT),
]


def naive_apply(text, spans_with_repl):
    """Rebuild the string piece by piece, left to right."""
    out, cursor = "", 0
    for (s, e), repl in spans_with_repl:
        out += text[cursor:s] + repl
        cursor = e
    return out + text[cursor:]


def test_outer_conservative_masks_whole_name():
    plan = plan_redaction(NAME_NEST, RedactionPolicy.mask_all())
    assert [(m.span.start, m.span.end) for m in plan.entries] == [(0, 10)]


def test_inner_surgical_masks_name_parts():
    plan = plan_redaction(NAME_NEST, RedactionPolicy.mask_all("inner_surgical"))
    assert [(m.span.start, m.span.end) for m in plan.entries] == [(0, 4), (5, 10)]
    assert any("split" in line for line in plan.audit)


def test_url_keep_token_mask_surgical():
    policy = RedactionPolicy(actions={"url": "keep", "access_token": "mask_full"}, granularity="inner_surgical")
    result = redact(URL_TEXT, URL_NEST, policy)
    assert result.redacted_text == URL_TEXT[:TOKEN_START] + "██████" + URL_TEXT[URL_END:]


def test_keep_inside_mask_is_overridden_and_audited():
    policy = RedactionPolicy(actions={"first_name": "keep"})
    plan = plan_redaction(NAME_NEST, policy)
    assert [(m.span.start, m.span.end) for m in plan.entries] == [(0, 10)]
    assert any("overridden" in line for line in plan.audit)


def test_empty_plan_is_identity():
    result = redact("nothing here", [], RedactionPolicy.mask_all())
    assert result.redacted_text == "nothing here"
    assert result.offset_map.is_identity()
    assert [result.offset_map(i) for i in range(13)] == list(range(13))


def test_placeholder_substitution():
    text = "call +1 415 555 0199"
    ent = Entity.at(5, 20, "phone_number", text=text)
    policy = RedactionPolicy(default_action="placeholder")
    assert redact(text, [ent], policy).redacted_text == "call [PHONE_NUMBER]"


def test_hash_is_salted_and_stable():
    text = "mail a@b.co"
    ent = [Entity.at(5, 11, "email", text=text)]
    a = redact(text, ent, RedactionPolicy(default_action="hash", hash_salt="s1")).redacted_text
    b = redact(text, ent, RedactionPolicy(default_action="hash", hash_salt="s1")).redacted_text
    c = redact(text, ent, RedactionPolicy(default_action="hash", hash_salt="s2")).redacted_text
    assert a == b != c and len(a) == 5 + 12


def test_adjacent_masks_match_naive_oracle():
    text = "ab123cd456ef"
    ents = [Entity.at(2, 5, "account_number", text=text), Entity.at(5, 7, "username", text=text), Entity.at(7, 10, "cvv", text=text)]
    policy = RedactionPolicy(default_action="placeholder")
    result = redact(text, ents, policy)
    expected = naive_apply(text, [((e.start, e.end), policy.placeholder(e.label)) for e in ents])
    assert result.redacted_text == expected
    om = result.offset_map
    assert om(0) == 0 and om(2) == 2
    assert om(5) == 2 + len("[ACCOUNT_NUMBER]")
    assert om(12) == len(expected)
    values = [om(i) for i in range(len(text) + 1)]
    assert values == sorted(values)
    with pytest.raises(IndexError):
        om(len(text) + 1)


def test_crossing_spans_unioned_under_priority():
    text = "0123456789"
    ents = [Entity.at(0, 6, "email", text=text), Entity.at(4, 9, "password", text=text)]
    plan = plan_redaction(ents, RedactionPolicy.mask_all())
    assert [(m.span.start, m.span.end, m.label) for m in plan.entries] == [(0, 9, "password")]
    assert any("crossing" in line for line in plan.audit)


def test_identical_spans_one_mask():
    text = "4111111111111111"
    ents = [Entity.at(0, 16, "card_number", text=text), Entity.at(0, 16, "payment_card", text=text)]
    plan = plan_redaction(ents, RedactionPolicy.mask_all())
    assert len(plan) == 1


def test_length_preserving_mask():
    text = "pin 1234"
    result = redact(text, [Entity.at(4, 8, "password", text=text)], RedactionPolicy(mask_length=None))
    assert result.redacted_text == "pin ████" and result.offset_map.is_identity()


def test_keep_all_is_identity():
    result = redact(NAME_TEXT, NAME_NEST, RedactionPolicy.keep_all())
    assert result.redacted_text == NAME_TEXT and result.applied == ()


def test_preservation_and_idempotence(generated_200):
    policy = RedactionPolicy.mask_all()
    for doc in generated_200[:50]:
        result = redact(doc.text, doc.entities, policy)
        masked = [a.span for a in result.applied]
        om = result.offset_map
        new_spans = [Span(om(s.start), om(s.end)) for s in masked]
        assert "".join(unmasked_segments(doc.text, masked)) == "".join(
            unmasked_segments(result.redacted_text, new_spans)
        )
        again = [Entity(sp, a.label) for sp, a in zip(new_spans, result.applied)]
        assert redact(result.redacted_text, again, policy).redacted_text == result.redacted_text
        assert redact(result.redacted_text, [], policy).redacted_text == result.redacted_text


def test_overlapping_plan_rejected():
    plan = MaskPlan((MaskEntry(Span(0, 5), "mask_full", "email"), MaskEntry(Span(3, 7), "mask_full", "email")))
    with pytest.raises(PlanContractError):
        apply_masks("0123456789", plan, RedactionPolicy())


def test_policy_validation(tmp_path):
    with pytest.raises(PolicyError):
        RedactionPolicy(actions={"email": "shred"})
    with pytest.raises(PolicyError):
        RedactionPolicy(granularity="sideways")
    with pytest.raises(PolicyError):
        RedactionPolicy(placeholder_format="{nope}")
    bad = tmp_path / "bad.yaml"
    bad.write_text("granularity: inner_surgical\ncolour: red\n", encoding="utf-8")
    with pytest.raises(PolicyError):
        load_policy(bad)


def test_shipped_policy_files_load(root):
    example = load_policy(root / "docs" / "policy.example.yaml")
    surgical = load_policy(root / "docs" / "policy.inner_surgical.yaml")
    assert example.granularity in ("outer_conservative", "inner_surgical")
    assert surgical.granularity == "inner_surgical"
