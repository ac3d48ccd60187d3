"""Materialize the bundled fixture suite into a directory.

Writes corpus.jsonl, acceptance.json, and datasets/<name>/input_NN.txt
(with meta.json marking keyword datasets), the layout consumed by
`ontorec evaluate` and scripts/run_experiment.py.

Usage:
    python3 scripts/make_fixtures.py out_dir
"""

from __future__ import annotations

import argparse
import sys

from ontorec.fixtures import write_bundled_suite


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("out_dir", help="target directory (created if missing)")
    args = parser.parse_args(argv)
    corpus_dir, fixtures_dir = write_bundled_suite(args.out_dir)
    print(f"corpus + acceptance in {corpus_dir}")
    print(f"datasets in {fixtures_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
