from __future__ import annotations

import random
from collections import Counter

import pytest

from oracles import aba_oracle, iban_oracle, luhn_oracle
from piispan.core import AnnotatedDocument, Entity
from piispan.resources import LOCALES
from piispan.synthgen import (
    DOCUMENT_TYPES,
    UNITS,
    ConfigError,
    ConstraintSet,
    DiversityConstraint,
    ExternalGenerationError,
    GeneratorConfig,
    MissingCredentialsError,
    PlanningError,
    ProgrammaticConstraint,
    UnsupportedCombinationError,
    derive_seed,
    external_generate,
    generate_corpus,
    generate_template,
    generate_with_retries,
    plan_units,
    render_prompt,
    sample_constraints,
    validate_example,
)
from piispan.synthgen import fakers


def test_derive_seed_stable_and_distinct():
    assert derive_seed(7, 0) == derive_seed(7, 0)
    assert len({derive_seed(7, i) for i in range(1000)}) == 1000
    assert 0 <= derive_seed(7, 0) < 2**63


def test_constraints_deterministic_and_consistent(taxonomy):
    config = GeneratorConfig()
    for seed in range(200):
        cs = sample_constraints(seed, config, taxonomy)
        assert cs == sample_constraints(seed, config, taxonomy)
        p = cs.programmatic
        assert 2 <= len(p.required_labels) <= 8
        assert not p.required_labels & p.excluded_labels
        for label in p.required_labels:
            lo, hi = p.entity_counts[label]
            assert lo == 1 and 1 <= hi <= config.count_max


def test_programmatic_constraint_rejects_contradictions():
    with pytest.raises(ConfigError):
        ProgrammaticConstraint({"email": (1, 1)}, {"email"}, {"email"})
    with pytest.raises(ConfigError):
        ProgrammaticConstraint({"email": (2, 1)})


def test_config_validation():
    with pytest.raises(ConfigError):
        GeneratorConfig(backend="magic")
    with pytest.raises(ConfigError):
        GeneratorConfig(locale_weights={"en": 0.0})
    with pytest.raises(ConfigError):
        GeneratorConfig(required_range=(0, 3))


def test_template_doc_is_deterministic_and_valid(taxonomy):
    for seed in range(300):
        cs = sample_constraints(seed)
        doc = generate_template(cs, taxonomy=taxonomy)
        assert doc == generate_template(cs, taxonomy=taxonomy)
        assert validate_example(doc, cs, taxonomy) == [], (seed, doc.text)
        assert doc.metadata["locale"] == cs.diversity.locale
        assert doc.metadata["document_type"] == cs.diversity.document_type


def test_corpus_covers_everything(taxonomy):
    docs = list(generate_corpus(500, 7))
    labels = Counter(e.label for d in docs for e in d.entities)
    assert set(labels) == set(taxonomy.names)
    assert {d.metadata["locale"] for d in docs} == set(LOCALES)
    assert {d.metadata["document_type"] for d in docs} == set(DOCUMENT_TYPES)
    assert [d.id for d in docs[:2]] == ["gen-7-00000", "gen-7-00001"]


def test_workers_do_not_change_corpus():
    assert list(generate_corpus(60, 3)) == list(generate_corpus(60, 3, workers=4))


def test_planted_checksum_values_validate(generated_200):
    checks = {"card_number": luhn_oracle, "iban": iban_oracle, "routing_number": aba_oracle}
    seen = Counter()
    for doc in generated_200:
        for e in doc.entities:
            if e.label in checks:
                assert checks[e.label](e.surface) is True, e.surface
                seen[e.label] += 1
    assert all(seen[label] for label in checks)


def test_fakers_produce_valid_checksums():
    rng = random.Random(1)
    for _ in range(300):
        assert luhn_oracle(fakers.card_number(rng))
        assert aba_oracle(fakers.routing_number(rng))
        assert iban_oracle(fakers.iban(rng, rng.choice(sorted(fakers.IBAN_BBAN))))


def test_every_label_has_a_unit(taxonomy):
    covered = {label for unit in UNITS for label in unit.labels}
    assert covered == set(taxonomy.names)


def test_planner_respects_exclusions(taxonomy):
    depth = {n: len(taxonomy.ancestors(n)) for n in taxonomy.names}
    rng = random.Random(0)
    units = plan_units(rng, {"first_name": (1, 1)}, frozenset({"person"}), depth)
    assert all("person" not in u.labels for u in units)
    with pytest.raises(PlanningError):
        plan_units(rng, {"first_name": (1, 1)}, frozenset({"first_name"}), depth)


def _cs(**prog):
    return ConstraintSet(
        ProgrammaticConstraint(**prog), DiversityConstraint("support_ticket", "en"), seed=1
    )


def test_validate_example_kinds(taxonomy):
    text = "a@b.co c@d.co user1"
    doc = AnnotatedDocument(
        "d",
        text,
        (Entity.at(0, 6, "email", text=text), Entity.at(7, 13, "email", text=text), Entity.at(14, 19, "username", text=text)),
    )
    kinds = Counter(
        v.kind
        for v in validate_example(
            doc,
            _cs(
                entity_counts={"email": (1, 1), "phone_number": (1, 2), "url": (2, 3)},
                excluded_labels={"username"},
                required_labels={"email", "phone_number"},
            ),
            taxonomy,
        )
    )
    assert kinds == Counter(
        {"count_exceeded": 1, "at_least_one_unmet": 1, "count_below_min": 1, "exclusion_breach": 1}
    )


def test_count_exceeded_message_has_observed_count(taxonomy):
    text = "a@b.co c@d.co"
    doc = AnnotatedDocument("d", text, (Entity.at(0, 6, "email", text=text), Entity.at(7, 13, "email", text=text)))
    (v,) = validate_example(doc, _cs(entity_counts={"email": (0, 1)}), taxonomy)
    assert "2 times" in v.message


def test_unsupported_combination():
    cs = ConstraintSet(ProgrammaticConstraint({}), DiversityConstraint("chat_log", "ja"), seed=1)
    with pytest.raises(UnsupportedCombinationError):
        generate_template(cs)


@pytest.mark.parametrize("seed", [3, 42])
def test_prompt_matches_golden(root, seed):
    expected = (root / "tests" / "golden" / f"prompt_seed{seed}.txt").read_text(encoding="utf-8")
    assert render_prompt(sample_constraints(seed), GeneratorConfig().task_description) == expected


class _Resp:
    def __init__(self, status, body):
        self.status_code = status
        self._body = body

    def json(self):
        if isinstance(self._body, Exception):
            raise self._body
        return self._body


class FakeGenerator:
    """Stands in for a generator service; answers honestly from the request seed."""

    def __init__(self, script=()):
        self.script = list(script)
        self.calls = []

    def post(self, url, json, headers, timeout):
        self.calls.append((json, headers))
        if self.script:
            step = self.script.pop(0)
            if step != "ok":
                return step
        doc = generate_template(sample_constraints(json["seed"]))
        body = {
            "text": doc.text,
            "entities": [{"label": e.label, "start": e.start, "end": e.end, "text": e.surface} for e in doc.entities],
        }
        return _Resp(200, body)


CONFIG = GeneratorConfig(backend="external", endpoint="http://gen.invalid/v1", max_retries=3)


def test_external_success(monkeypatch):
    monkeypatch.setenv("PIISPAN_GENERATOR_API_KEY", "k")
    cs = sample_constraints(5)
    session = FakeGenerator()
    ex = external_generate(cs, CONFIG, "x1", session)
    assert ex.accepted and ex.document.metadata["backend"] == "external"
    payload, headers = session.calls[0]
    assert payload["seed"] == 5 and payload["temperature"] == 0.01
    assert payload["prompt"] == render_prompt(cs, CONFIG.task_description)
    assert headers["Authorization"] == "Bearer k"


def test_external_retries_then_accepts(monkeypatch):
    monkeypatch.setenv("PIISPAN_GENERATOR_API_KEY", "k")
    session = FakeGenerator([_Resp(200, {"text": "nothing", "entities": []}), _Resp(502, {}), "ok"])
    ex = generate_with_retries(sample_constraints(5), CONFIG, "x1", session)
    assert ex.accepted and len(session.calls) == 3
    assert len({c[0]["seed"] for c in session.calls}) == 3


def test_external_gives_up_after_budget(monkeypatch):
    monkeypatch.setenv("PIISPAN_GENERATOR_API_KEY", "k")
    session = FakeGenerator([_Resp(200, ValueError("x"))] * 3)
    with pytest.raises(ExternalGenerationError):
        generate_with_retries(sample_constraints(5), CONFIG, "x1", session)
    assert len(session.calls) == 3


def test_external_wrong_surface_is_a_violation(monkeypatch):
    monkeypatch.setenv("PIISPAN_GENERATOR_API_KEY", "k")
    body = {"text": "mail a@b.co", "entities": [{"label": "email", "start": 5, "end": 11, "text": "x@b.co"}]}
    cs = _cs(entity_counts={"email": (1, 1)}, required_labels={"email"})
    ex = external_generate(cs, CONFIG, "x", FakeGenerator([_Resp(200, body)]))
    assert not ex.accepted
    assert [v.kind for v in ex.violations] == ["surface_mismatch"]


def test_missing_credentials(monkeypatch):
    monkeypatch.delenv("PIISPAN_GENERATOR_API_KEY", raising=False)
    session = FakeGenerator()
    with pytest.raises(MissingCredentialsError):
        generate_with_retries(sample_constraints(5), CONFIG, "x", session)
    assert session.calls == []
