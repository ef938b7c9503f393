from __future__ import annotations

import json

import pytest

from piispan.cli import main
from piispan.core import AnnotatedDocument, Entity, Span
from piispan.corpus_io import read_corpus, write_corpus

URL_TEXT = "Reset via https://auth.example.com/reset?token=eyJhbGciOi.abc now"
U0, U1 = URL_TEXT.index("https"), URL_TEXT.index(" now")
T0 = URL_TEXT.index("eyJ")


@pytest.fixture
def url_corpus(tmp_path):
    path = tmp_path / "url.jsonl"
    doc = AnnotatedDocument(
        "u1",
        URL_TEXT,
        (Entity.at(U0, U1, "url", text=URL_TEXT), Entity.at(T0, U1, "access_token", text=URL_TEXT)),
    )
    write_corpus([doc], path)
    return path


@pytest.fixture
def gen_corpus(tmp_path):
    path = tmp_path / "gold.jsonl"
    assert main(["gen", "--size", "40", "--seed", "2", "--output", str(path)]) == 0
    return path


def test_no_subcommand_is_usage_error(capsys):
    assert main([]) == 2
    assert main(["detect", "--bogus"]) == 2


def test_missing_required_option_is_usage_error(tmp_path, capsys):
    assert main(["detect", "--output", str(tmp_path / "x.jsonl"), "--labels", "email"]) == 2
    assert "--input" in capsys.readouterr().err


def test_label_outside_taxonomy_warns(gen_corpus, tmp_path, capsys):
    assert main(["detect", "--input", str(gen_corpus), "--output", str(tmp_path / "p.jsonl"), "--labels", "email,shoe_size"]) == 0
    assert "shoe_size" in capsys.readouterr().err


def test_duplicate_label_is_usage_error(gen_corpus, tmp_path):
    assert main(["detect", "--input", str(gen_corpus), "--output", str(tmp_path / "p.jsonl"), "--labels", "email,email"]) == 2


def test_missing_input_file_is_runtime_failure(tmp_path):
    assert main(["detect", "--input", str(tmp_path / "none.jsonl"), "--output", str(tmp_path / "p.jsonl"), "--labels", "email"]) == 1


def test_gen_is_byte_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    assert main(["gen", "--size", "30", "--seed", "9", "--output", str(a)]) == 0
    assert main(["gen", "--size", "30", "--seed", "9", "--output", str(b), "--workers", "3"]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert "labels covered" in capsys.readouterr().out


def test_gen_locale_filter_and_unsupported(tmp_path, capsys):
    out = tmp_path / "g.jsonl"
    assert main(["gen", "--size", "10", "--seed", "1", "--locales", "fr,ja", "--output", str(out)]) == 0
    assert "ja" in capsys.readouterr().err
    assert {d.language for d in read_corpus(out)} == {"fr"}
    assert main(["gen", "--size", "10", "--seed", "1", "--locales", "fr,ja", "--strict", "--output", str(out)]) == 2


def test_gen_external_needs_credentials(tmp_path, monkeypatch):
    monkeypatch.delenv("PIISPAN_GENERATOR_API_KEY", raising=False)
    out = str(tmp_path / "g.jsonl")
    assert main(["gen", "--backend", "external", "--output", out]) == 2
    assert main(["gen", "--backend", "external", "--endpoint", "http://x.invalid", "--output", out]) == 2


def test_detect_eval_roundtrip(gen_corpus, tmp_path, capsys):
    pred = tmp_path / "pred.jsonl"
    report = tmp_path / "r.json"
    assert main(["detect", "--input", str(gen_corpus), "--output", str(pred), "--labels", "email,phone_number,iban"]) == 0
    docs = list(read_corpus(pred))
    assert all(e.label in {"email", "phone_number", "iban"} for d in docs for e in d.entities)
    assert main(["eval", "--gold", f"g={gen_corpus}", "--input", f"g={pred}", "--output", str(report)]) == 0
    data = json.loads(report.read_text())
    assert data["per_label"]["email"]["recall"] > 0.9


@pytest.fixture
def partial_map(tmp_path):
    path = tmp_path / "partial.yaml"
    path.write_text("name: partial\ntargets: [card_number]\nmap:\n  card_number: card_number\n", encoding="utf-8")
    return str(path)


def test_eval_strict_map_fails_on_unmapped(gen_corpus, partial_map):
    cmap = partial_map
    args = ["eval", "--gold", str(gen_corpus), "--input", str(gen_corpus), "--map", cmap, "--gold-map", cmap]
    assert main(args) == 0
    assert main(args + ["--strict"]) == 1


def test_eval_misaligned_ids(gen_corpus, tmp_path):
    other = tmp_path / "other.jsonl"
    write_corpus([AnnotatedDocument("zzz", "x")], other)
    assert main(["eval", "--gold", str(gen_corpus), "--input", str(other)]) == 1


def test_redact_inner_surgical_on_url(url_corpus, tmp_path, root):
    out = tmp_path / "red.jsonl"
    policy = str(root / "docs" / "policy.inner_surgical.yaml")
    assert main(["redact", "--input", str(url_corpus), "--output", str(out), "--policy", policy]) == 0
    (doc,) = read_corpus(out)
    assert doc.text.startswith(URL_TEXT[:T0]) and doc.text.endswith(URL_TEXT[U1:])
    assert "eyJhbGciOi" not in doc.text
    audit = [json.loads(line) for line in (tmp_path / "red.audit.jsonl").read_text().splitlines()]
    assert [(m["start"], m["end"], m["label"]) for m in audit[0]["masks"]] == [(T0, U1, "access_token")]
    assert audit[0]["masks"][0]["redacted_start"] == T0


def test_redact_outer_conservative_on_url(url_corpus, tmp_path):
    policy = tmp_path / "p.yaml"
    policy.write_text("granularity: outer_conservative\n", encoding="utf-8")
    out = tmp_path / "red.jsonl"
    assert main(["redact", "--input", str(url_corpus), "--output", str(out), "--policy", str(policy)]) == 0
    (doc,) = read_corpus(out)
    assert doc.text == URL_TEXT[:U0] + "██████" + URL_TEXT[U1:]


def test_redact_bad_policy_is_usage_error(url_corpus, tmp_path):
    policy = tmp_path / "p.yaml"
    policy.write_text("granularity: sideways\n", encoding="utf-8")
    assert main(["redact", "--input", str(url_corpus), "--output", str(tmp_path / "o.jsonl"), "--policy", str(policy)]) == 2


def test_validate_surface_mismatch(tmp_path, capsys):
    path = tmp_path / "bad.jsonl"
    rec = {"id": "a", "text": "mail a@b.co", "entities": [{"start": 5, "end": 11, "label": "email", "text": "x@b.co"}]}
    path.write_text(json.dumps(rec) + "\n", encoding="utf-8")
    assert main(["validate", "--input", str(path), "--strict"]) == 1
    out = capsys.readouterr().out
    assert f"{path}:1:" in out and "surface" in out
    assert main(["validate", "--input", str(path)]) == 0


def test_validate_clean_corpus(gen_corpus, capsys):
    assert main(["validate", "--input", str(gen_corpus), "--strict"]) == 0
    assert "0 violations" in capsys.readouterr().out


def test_map_merges_and_strict(tmp_path, root, partial_map, capsys):
    text = "4111111111111111"
    src = tmp_path / "in.jsonl"
    write_corpus(
        [AnnotatedDocument("a", text, (Entity.at(0, 16, "card_number", text=text), Entity.at(0, 16, "payment_card", text=text)))],
        src,
    )
    out = tmp_path / "out.jsonl"
    spy = str(root / "src" / "piispan" / "data" / "spy_map.yaml")
    assert main(["map", "--input", str(src), "--output", str(out), "--map", spy]) == 0
    assert "1 documents, 1 entities, 1 merged" in capsys.readouterr().out
    (doc,) = read_corpus(out)
    assert [(e.span, e.label) for e in doc.entities] == [(Span(0, 16), "id_num")]
    assert main(["map", "--input", str(src), "--output", str(out), "--map", partial_map, "--strict"]) == 1


def test_import_with_profile(tmp_path, root):
    ext = tmp_path / "ext.jsonl"
    text = "Zoë wrote from zoe@x.de"
    start = len(text[: text.index("zoe@")].encode("utf-8"))
    rec = {"uid": "e1", "source_text": text, "privacy_mask": [{"value_start": start, "value_end": start + 8, "entity": "email"}]}
    ext.write_text(json.dumps(rec, ensure_ascii=False) + "\n", encoding="utf-8")
    out = tmp_path / "imp.jsonl"
    assert main(["import", "--input", str(ext), "--output", str(out), "--profile", str(root / "docs" / "import_profile.example.yaml")]) == 0
    (doc,) = read_corpus(out)
    assert doc.entities[0].surface == "zoe@x.de"


def test_console_script_help(capsys):
    assert main(["--help"]) == 0
    assert main(["detect", "--help"]) == 0
    assert "PIISPAN_DETECTOR_API_KEY" in capsys.readouterr().out
