"""Command-line entry point: ``piispan <subcommand> ...``.

Exit status: 0 success, 1 data or runtime failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from collections import Counter
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Sequence

import yaml

from . import __version__
from .core import AnnotatedDocument, Schema, SchemaError, validate_document
from .corpus_io import (
    CorpusError,
    FieldProfile,
    ImportProfileError,
    import_external,
    read_corpus,
    record_to_document,
    write_corpus,
)
from .detect import (
    API_KEY_ENV,
    DEFAULT_THRESHOLD,
    BackendDescriptor,
    DetectionError,
    extract_many,
)
from .evaluation import AlignmentError, DuplicateTripleError, evaluate_corpus
from .mapping import LabelMap, MappingError, UnmappedLabelError, load_label_map, map_entities
from .redact import PolicyError, apply_masks, load_policy, plan_redaction
from .resources import LOCALES
from .synthgen import (
    DOCUMENT_TYPES,
    GENERATOR_KEY_ENV,
    ConfigError,
    Coverage,
    ExternalGenerationError,
    GeneratorConfig,
    MissingCredentialsError,
    derive_seed,
    generate_corpus,
    generate_with_retries,
    sample_constraints,
    supported,
)
from .taxonomy import builtin_taxonomy

logger = logging.getLogger("piispan")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Bad flags or configuration; maps to exit status 2."""


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    output: str | None = None
    labels: str | None = None
    schema_file: str | None = None
    threshold: float = DEFAULT_THRESHOLD
    policy: str | None = None
    map: str | None = None
    gold: list[str] | None = None
    gold_map: str | None = None
    audit: str | None = None
    backend: str = "builtin"
    endpoint: str | None = None
    timeout: float = 30.0
    seed: int = 0
    size: int = 100
    strict: bool = False
    workers: int = 1
    profile: str | None = None
    config: str | None = None
    locales: str | None = None
    doc_types: str | None = None

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfig:
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in vars(ns).items() if k in known})


# -- helpers --------------------------------------------------------------------


def _require(cfg: RunConfig, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(cfg, n) in (None, "")]
    if missing:
        raise UsageError(f"{cfg.subcommand}: missing required option(s) {', '.join(missing)}")


def _schema(cfg: RunConfig) -> Schema:
    """Schema from --labels (comma list) or --schema-file (YAML list or label: description map)."""
    if cfg.labels and cfg.schema_file:
        raise UsageError("use either --labels or --schema-file, not both")
    try:
        if cfg.labels:
            return Schema.from_labels([x.strip() for x in cfg.labels.split(",") if x.strip()])
        if cfg.schema_file:
            with open(cfg.schema_file, encoding="utf-8") as fh:
                data = yaml.safe_load(fh)
            if isinstance(data, dict) and "labels" in data:
                data = data["labels"]
            if isinstance(data, list):
                entries = []
                for item in data:
                    if isinstance(item, dict):
                        entries.append((str(item["label"]), item.get("description")))
                    else:
                        entries.append((str(item), None))
                return Schema(tuple(entries))
            if isinstance(data, dict):
                return Schema.from_labels({str(k): v for k, v in data.items()})
            raise UsageError(f"{cfg.schema_file}: expected a list of labels or a label-to-description map")
    except (OSError, yaml.YAMLError, KeyError) as exc:
        raise UsageError(f"cannot read schema: {exc}") from exc
    except SchemaError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"{cfg.subcommand}: a schema is required (--labels or --schema-file)")


def _backend(cfg: RunConfig) -> BackendDescriptor:
    if cfg.backend == "builtin":
        return BackendDescriptor()
    if not cfg.endpoint:
        raise UsageError("--backend remote needs --endpoint")
    return BackendDescriptor("remote", cfg.endpoint, timeout=cfg.timeout, max_in_flight=max(1, cfg.workers))


def _read(path: str) -> list[AnnotatedDocument]:
    return list(read_corpus(path))


def _print_counts(title: str, counts: Counter) -> None:
    print(title)
    for label, n in sorted(counts.items()):
        print(f"  {label:<24}{n:>7}")


def _labels_of(docs: Sequence[AnnotatedDocument]) -> set[str]:
    return {e.label for d in docs for e in d.entities}


# -- subcommands ----------------------------------------------------------------


def cmd_detect(cfg: RunConfig) -> int:
    _require(cfg, "input", "output")
    schema = _schema(cfg)
    backend = _backend(cfg)
    if not 0.0 <= cfg.threshold <= 1.0:
        raise UsageError("--threshold must be within [0, 1]")
    if backend.kind == "builtin_rules":
        unknown = [label for label in schema.labels if label not in builtin_taxonomy()]
        if unknown:
            print(f"warning: the builtin detector has no recognizer for: {', '.join(unknown)}", file=sys.stderr)
    docs = _read(cfg.input)
    results = extract_many(
        [d.text for d in docs], schema, backend, threshold=cfg.threshold, workers=cfg.workers
    )
    preds = [d.replace(entities=tuple(ents)) for d, ents in zip(docs, results)]
    write_corpus(preds, cfg.output)
    _print_counts(
        f"{len(preds)} documents, {sum(len(p.entities) for p in preds)} entities",
        Counter(e.label for p in preds for e in p.entities),
    )
    return EXIT_OK


def cmd_redact(cfg: RunConfig) -> int:
    _require(cfg, "input", "output", "policy")
    try:
        policy = load_policy(cfg.policy)
    except (OSError, PolicyError) as exc:
        raise UsageError(f"policy: {exc}") from exc
    docs = _read(cfg.input)
    if cfg.labels or cfg.schema_file:
        schema = _schema(cfg)
        found = extract_many([d.text for d in docs], schema, _backend(cfg), threshold=cfg.threshold, workers=cfg.workers)
        docs = [d.replace(entities=tuple(ents)) for d, ents in zip(docs, found)]
    taxonomy = builtin_taxonomy()
    out_docs, audit_records = [], []
    masked = 0
    for doc in docs:
        plan = plan_redaction(list(doc.entities), policy, taxonomy, doc.id)
        result = apply_masks(doc.text, plan, policy)
        masked += len(result.applied)
        out_docs.append(AnnotatedDocument(doc.id, result.redacted_text, (), doc.language, dict(doc.metadata)))
        audit_records.append(
            {
                "id": doc.id,
                "masks": [
                    {
                        "start": m.span.start,
                        "end": m.span.end,
                        "label": m.label,
                        "action": m.action,
                        "replacement": m.replacement,
                        "redacted_start": result.offset_map(m.span.start),
                    }
                    for m in result.applied
                ],
                "notes": list(plan.audit),
            }
        )
    write_corpus(out_docs, cfg.output)
    audit_path = cfg.audit or str(Path(cfg.output).with_suffix(".audit.jsonl"))
    with open(audit_path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in audit_records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    print(f"{len(out_docs)} documents, {masked} masks applied; audit written to {audit_path}")
    return EXIT_OK


def _named_paths(values: Sequence[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for value in values:
        name, sep, path = value.partition("=")
        if not sep:
            name, path = Path(value).stem, value
        if name in out:
            raise UsageError(f"corpus name {name!r} given twice")
        out[name] = path
    return out


def _load_map(path: str | None, what: str) -> LabelMap | None:
    if not path:
        return None
    try:
        return load_label_map(path)
    except (OSError, MappingError) as exc:
        raise UsageError(f"{what}: {exc}") from exc


def cmd_eval(cfg: RunConfig) -> int:
    _require(cfg, "input", "gold")
    gold_paths = _named_paths(cfg.gold)
    pred_paths = _named_paths(cfg.input if isinstance(cfg.input, list) else [cfg.input])
    if len(gold_paths) == 1 and len(pred_paths) == 1:
        (gname, gpath), (_, ppath) = next(iter(gold_paths.items())), next(iter(pred_paths.items()))
        gold_paths, pred_paths = {gname: gpath}, {gname: ppath}
    label_map = _load_map(cfg.map, "--map")
    gold_map = _load_map(cfg.gold_map, "--gold-map")
    gold = {name: _read(path) for name, path in gold_paths.items()}
    pred = {name: _read(path) for name, path in pred_paths.items()}
    if not cfg.strict:
        if label_map is not None:
            label_map = _lenient(label_map, {lab for docs in pred.values() for lab in _labels_of(docs)})
        if gold_map is not None:
            gold_map = _lenient(gold_map, {lab for docs in gold.values() for lab in _labels_of(docs)})
    report = evaluate_corpus(gold, pred, label_map, gold_map=gold_map, threshold=cfg.threshold, workers=cfg.workers)
    print(report.to_text())
    if cfg.output:
        report.write_json(cfg.output)
    return EXIT_OK


def _lenient(label_map: LabelMap, labels: set[str]) -> LabelMap:
    """Drop labels the map does not mention instead of failing."""
    missing = sorted(labels - set(label_map.entries))
    if not missing:
        return label_map
    logger.warning("map %s does not cover %s; dropping them", label_map.name, ", ".join(missing))
    entries = dict(label_map.entries)
    entries.update({label: "drop" for label in missing})
    return LabelMap(label_map.name, entries, label_map.target_schema)


def _gen_config(cfg: RunConfig) -> GeneratorConfig:
    data: dict = {}
    if cfg.config:
        try:
            with open(cfg.config, encoding="utf-8") as fh:
                data = yaml.safe_load(fh) or {}
        except (OSError, yaml.YAMLError) as exc:
            raise UsageError(f"--config: {exc}") from exc
        known = {f.name for f in fields(GeneratorConfig)}
        unknown = set(data) - known
        if unknown:
            raise UsageError(f"--config: unknown keys {sorted(unknown)}")
        for key in ("required_range", "excluded_range", "optional_range", "registers", "tones"):
            if key in data:
                data[key] = tuple(data[key])
    if cfg.locales:
        data["locale_weights"] = {x.strip(): 1.0 for x in cfg.locales.split(",") if x.strip()}
    if cfg.doc_types:
        data["document_type_weights"] = {x.strip(): 1.0 for x in cfg.doc_types.split(",") if x.strip()}
    data["backend"] = "external" if cfg.backend == "external" else "template"
    if cfg.endpoint:
        data["endpoint"] = cfg.endpoint
    data["target_corpus_size"] = cfg.size
    try:
        return GeneratorConfig(**data)
    except (ConfigError, TypeError) as exc:
        raise UsageError(f"generator config: {exc}") from exc


def cmd_gen(cfg: RunConfig) -> int:
    _require(cfg, "output")
    if cfg.size < 0:
        raise UsageError("--size must be non-negative")
    gconf = _gen_config(cfg)
    if gconf.backend == "template":
        unsupported = sorted(
            f"{t}/{loc}"
            for t in gconf.document_type_weights
            for loc in gconf.locale_weights
            if not supported(t, loc)
        )
        if unsupported:
            print(f"unsupported (document type, locale) combinations: {', '.join(unsupported)}", file=sys.stderr)
            if cfg.strict:
                raise UsageError("unsupported combinations requested in strict mode")
            locales = {k: v for k, v in gconf.locale_weights.items() if k in LOCALES}
            types = {k: v for k, v in gconf.document_type_weights.items() if k in DOCUMENT_TYPES}
            if not locales or not types:
                raise UsageError("no supported combination left")
            gconf = GeneratorConfig(
                **{**{f.name: getattr(gconf, f.name) for f in fields(gconf)}, "locale_weights": locales, "document_type_weights": types}
            )
        docs = generate_corpus(cfg.size, cfg.seed, gconf, workers=cfg.workers)
    else:
        _check_external(cfg, gconf)
        docs = _external_docs(cfg, gconf)
    coverage = Coverage()

    def counted():
        for doc in docs:
            coverage.add(doc)
            yield doc

    n = write_corpus(counted(), cfg.output)
    taxonomy = builtin_taxonomy()
    print(f"wrote {n} documents to {cfg.output}")
    summary = coverage.summary()
    print(f"labels covered: {len(summary['labels'])}/{len(taxonomy)}")
    missing = coverage.missing_labels(taxonomy)
    if missing and n:
        print(f"labels missing: {', '.join(missing)}")
    print(f"locales: {json.dumps(summary['locales'], ensure_ascii=False)}")
    print(f"document types: {json.dumps(summary['document_types'])}")
    return EXIT_OK


def _check_external(cfg: RunConfig, gconf: GeneratorConfig) -> None:
    if not gconf.endpoint:
        raise UsageError("--backend external needs --endpoint")
    if cfg.size and not os.environ.get(GENERATOR_KEY_ENV):
        raise UsageError(f"external generator needs an API key in ${GENERATOR_KEY_ENV}")


def _external_docs(cfg: RunConfig, gconf: GeneratorConfig):
    rejected = 0
    for i in range(cfg.size):
        cs = sample_constraints(derive_seed(cfg.seed, i), gconf)
        example = generate_with_retries(cs, gconf, f"gen-{cfg.seed}-{i:05d}")
        if not example.accepted:
            rejected += 1
            logger.warning("%s rejected after retries: %s", example.document.id, [v.kind for v in example.violations])
            if cfg.strict:
                raise ExternalGenerationError(f"{example.document.id} failed validation")
            continue
        yield example.document
    if rejected:
        print(f"{rejected} examples rejected", file=sys.stderr)


def cmd_validate(cfg: RunConfig) -> int:
    """Report annotation violations per line; strict mode fails on any error."""
    _require(cfg, "input")
    taxonomy = builtin_taxonomy()
    total = 0
    errors = 0
    with open(cfg.input, "rb") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if not raw.strip():
                continue
            try:
                doc = record_to_document(json.loads(raw.decode("utf-8")), verify_surfaces=False)
            except (UnicodeDecodeError, ValueError, TypeError) as exc:
                print(f"{cfg.input}:{lineno}: error malformed_record: {exc}")
                total += 1
                errors += 1
                continue
            for v in validate_document(doc, taxonomy, strict=cfg.strict):
                print(f"{cfg.input}:{lineno}: {v.severity} {v.kind}: {v.message}")
                total += 1
                errors += v.is_error
    print(f"{total} violations")
    return EXIT_FAILURE if cfg.strict and errors else EXIT_OK


def cmd_map(cfg: RunConfig) -> int:
    _require(cfg, "input", "output", "map")
    label_map = _load_map(cfg.map, "--map")
    docs = _read(cfg.input)
    labels = _labels_of(docs)
    if cfg.strict:
        label_map.check_total(sorted(labels))
    else:
        label_map = _lenient(label_map, labels)
    before = after = 0
    out = []
    for doc in docs:
        mapped = map_entities(list(doc.entities), label_map)
        kept = [e for e in doc.entities if label_map.entries[e.label] != "drop"]
        before += len(kept)
        after += len(mapped)
        out.append(doc.replace(entities=tuple(mapped)))
    write_corpus(out, cfg.output)
    print(f"{len(out)} documents, {after} entities, {before - after} merged")
    return EXIT_OK


def cmd_import(cfg: RunConfig) -> int:
    _require(cfg, "input", "output")
    try:
        profile = FieldProfile.load(cfg.profile) if cfg.profile else FieldProfile()
    except (OSError, ImportProfileError, TypeError) as exc:
        raise UsageError(f"--profile: {exc}") from exc
    n = write_corpus(import_external(cfg.input, profile), cfg.output)
    print(f"imported {n} documents")
    return EXIT_OK


COMMANDS = {
    "detect": cmd_detect,
    "redact": cmd_redact,
    "eval": cmd_eval,
    "gen": cmd_gen,
    "validate": cmd_validate,
    "map": cmd_map,
    "import": cmd_import,
}

EPILOG = f"""\
environment:
  {API_KEY_ENV}   bearer token sent to a remote detector (--backend remote)
  {GENERATOR_KEY_ENV}  API key for the external generator (gen --backend external)

exit status: 0 success, 1 data or runtime failure, 2 usage or configuration error
"""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="piispan",
        description="Detect, redact, map, evaluate and synthesize PII span annotations.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)

    def schema_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--labels", help="comma-separated label list")
        p.add_argument("--schema-file", help="YAML list of labels, or label: description map")

    def backend_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--backend", choices=("builtin", "remote"), default="builtin")
        p.add_argument("--endpoint", help="URL of the remote detector")
        p.add_argument("--timeout", type=float, default=30.0)

    p = add("detect", "extract entities from a corpus")
    p.add_argument("--input", help="input corpus (JSONL)")
    p.add_argument("--output", help="prediction corpus to write")
    schema_flags(p)
    backend_flags(p)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--workers", type=int, default=1)

    p = add("redact", "mask entities according to a policy")
    p.add_argument("--input", help="corpus whose entities are masked")
    p.add_argument("--output", help="redacted corpus to write")
    p.add_argument("--policy", help="YAML redaction policy")
    p.add_argument("--audit", help="audit JSONL (default: <output>.audit.jsonl)")
    schema_flags(p)
    backend_flags(p)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--workers", type=int, default=1)

    p = add("eval", "score predictions against gold")
    p.add_argument("--gold", action="append", help="gold corpus, optionally NAME=PATH; repeat for several corpora")
    p.add_argument("--input", action="append", help="prediction corpus, optionally NAME=PATH")
    p.add_argument("--map", help="label map applied to predictions")
    p.add_argument("--gold-map", help="label map applied to gold")
    p.add_argument("--threshold", type=float, default=0.5)
    p.add_argument("--output", help="write the report as JSON")
    p.add_argument("--strict", action="store_true", help="fail on labels the map does not cover")
    p.add_argument("--workers", type=int, default=1)

    p = add("gen", "generate a synthetic annotated corpus")
    p.add_argument("--output")
    p.add_argument("--size", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("template", "external"), default="template")
    p.add_argument("--endpoint", help="external generator URL")
    p.add_argument("--config", help="YAML generator config")
    p.add_argument("--locales", help="comma-separated locales to sample from")
    p.add_argument("--doc-types", help="comma-separated document types to sample from")
    p.add_argument("--strict", action="store_true", help="fail on unsupported combinations or rejected examples")
    p.add_argument("--workers", type=int, default=1)

    p = add("validate", "check annotation invariants of a corpus")
    p.add_argument("--input")
    p.add_argument("--strict", action="store_true", help="treat unknown labels and crossings as errors; exit 1 on errors")

    p = add("map", "project labels through a label map")
    p.add_argument("--input")
    p.add_argument("--output")
    p.add_argument("--map", help="YAML label map")
    p.add_argument("--strict", action="store_true", help="fail on labels the map does not cover")

    p = add("import", "convert an external span dataset to the canonical corpus format")
    p.add_argument("--input")
    p.add_argument("--output")
    p.add_argument("--profile", help="YAML field profile")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    cfg = RunConfig.from_namespace(ns)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except UsageError as exc:
        print(f"piispan {cfg.subcommand}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MissingCredentialsError as exc:
        print(f"piispan {cfg.subcommand}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnmappedLabelError as exc:
        print(f"piispan {cfg.subcommand}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (
        CorpusError,
        DetectionError,
        AlignmentError,
        DuplicateTripleError,
        ExternalGenerationError,
        MappingError,
        OSError,
    ) as exc:
        print(f"piispan {cfg.subcommand}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
