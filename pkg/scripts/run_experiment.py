"""Run the evaluation harness over a fixture suite and print the report.

Without arguments the bundled suite is materialized into a temporary
directory and evaluated; pass --corpus-dir/--fixtures-dir to evaluate your
own corpus and datasets instead.

Usage:
    python3 scripts/run_experiment.py [--out report.json] [--workers 8]
    python3 scripts/run_experiment.py --corpus-dir data --fixtures-dir data/datasets
"""

from __future__ import annotations

import argparse
import sys
import tempfile
from pathlib import Path

from ontorec.evalharness import run_experiment
from ontorec.fixtures import write_bundled_suite


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--corpus-dir", help="directory with corpus.jsonl and acceptance.json")
    parser.add_argument("--fixtures-dir", help="directory with dataset subdirectories")
    parser.add_argument("--out", help="write the JSON report to this file")
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args(argv)

    if bool(args.corpus_dir) != bool(args.fixtures_dir):
        parser.error("--corpus-dir and --fixtures-dir must be given together")

    if args.corpus_dir:
        report = run_experiment(args.corpus_dir, args.fixtures_dir, workers=args.workers)
    else:
        with tempfile.TemporaryDirectory(prefix="ontorec-suite-") as tmp:
            corpus_dir, fixtures_dir = write_bundled_suite(tmp)
            report = run_experiment(corpus_dir, fixtures_dir, workers=args.workers)

    print(report.format_table())
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
        print(f"\nreport written to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
