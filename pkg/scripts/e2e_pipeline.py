#!/usr/bin/env python3
"""gen -> detect (builtin) -> map -> eval, through the CLI, in one run.

Prints the checksum-label report and the seven-class report and exits
non-zero if recall on card_number, iban or routing_number drops below 0.95.

    python3 scripts/e2e_pipeline.py --size 500 --seed 7 --workdir /tmp/e2e
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
import time
from pathlib import Path

from piispan.cli import main as cli
from piispan.taxonomy import builtin_taxonomy

ROOT = Path(__file__).resolve().parent.parent
CHECKSUM_MAP = ROOT / "docs" / "maps" / "checksum_labels.yaml"
SPY_MAP = ROOT / "src" / "piispan" / "data" / "spy_map.yaml"
CHECKSUM_LABELS = ("card_number", "iban", "routing_number")


def run(argv: list[str]) -> None:
    status = cli(argv)
    if status != 0:
        raise SystemExit(f"piispan {' '.join(argv)} exited with {status}")


def pipeline(size: int, seed: int, workdir: Path, workers: int = 1) -> dict:
    workdir.mkdir(parents=True, exist_ok=True)
    gold, pred = workdir / "gold.jsonl", workdir / "pred.jsonl"
    gold_mapped, pred_mapped = workdir / "gold.mapped.jsonl", workdir / "pred.mapped.jsonl"
    schema = workdir / "schema.yaml"
    schema.write_text("".join(f"- {name}\n" for name in builtin_taxonomy().names), encoding="utf-8")

    t0 = time.perf_counter()
    run(["gen", "--size", str(size), "--seed", str(seed), "--output", str(gold)])
    run(["detect", "--input", str(gold), "--output", str(pred), "--schema-file", str(schema), "--workers", str(workers)])
    run(["map", "--input", str(pred), "--output", str(pred_mapped), "--map", str(CHECKSUM_MAP)])
    run(["map", "--input", str(gold), "--output", str(gold_mapped), "--map", str(CHECKSUM_MAP)])
    report_path = workdir / "checksum_report.json"
    run(["eval", "--gold", f"synthetic={gold_mapped}", "--input", f"synthetic={pred_mapped}", "--output", str(report_path)])
    spy_path = workdir / "spy_report.json"
    run(["eval", "--gold", f"synthetic={gold}", "--input", f"synthetic={pred}",
         "--map", str(SPY_MAP), "--gold-map", str(SPY_MAP), "--output", str(spy_path)])
    elapsed = time.perf_counter() - t0

    report = json.loads(report_path.read_text(encoding="utf-8"))
    per_label = report["per_label"]
    return {
        "elapsed": elapsed,
        "recall": {label: per_label[label]["recall"] for label in CHECKSUM_LABELS},
        "precision": {label: per_label[label]["precision"] for label in CHECKSUM_LABELS},
        "spy_micro_f1": json.loads(spy_path.read_text(encoding="utf-8"))["micro"]["f1"],
    }


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=500)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--workdir", type=Path)
    args = parser.parse_args(argv)
    if args.workdir is None:
        with tempfile.TemporaryDirectory() as tmp:
            result = pipeline(args.size, args.seed, Path(tmp), args.workers)
    else:
        result = pipeline(args.size, args.seed, args.workdir, args.workers)
    print(json.dumps(result, indent=2))
    ok = all(r >= 0.95 for r in result["recall"].values())
    print(f"checksum-label recall >= 0.95: {'PASS' if ok else 'FAIL'}; elapsed {result['elapsed']:.1f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
