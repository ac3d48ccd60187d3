"""Command line interface: recommend, serve, evaluate."""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
from pathlib import Path

from ontorec.config import RecommenderConfig
from ontorec.errors import RecommenderError
from ontorec.pipeline import Recommender, RecommendRequest
from ontorec.service import serialize_response, serve, weights_from_optional


def _add_corpus_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", required=True, help="JSON-Lines corpus file")
    parser.add_argument("--acceptance", help="acceptance JSON file")
    parser.add_argument("--config", help="JSON config file overriding defaults")


def _load_config(args: argparse.Namespace) -> RecommenderConfig | None:
    if getattr(args, "config", None):
        return RecommenderConfig.from_file(args.config)
    return None


def _build_recommender(args: argparse.Namespace) -> Recommender:
    return Recommender.from_files(args.corpus, args.acceptance, _load_config(args))


def _format_ranking_table(payload: dict) -> str:
    headers = ["pos", "ontologies", "final", "cov", "acc", "det", "spec", "anns"]
    rows = []
    for e in payload["entries"]:
        d = e["display_scores"]
        rows.append([
            str(e["position"]),
            " ".join(e["ontologies"]),
            f"{e['final_score']:.4f}",
            str(d.get("coverage", "-")),
            str(d.get("acceptance", "-")),
            str(d.get("detail", "-")),
            str(d.get("specialization", "-")),
            str(e["annotation_count"]),
        ])
    if not rows:
        return "(empty ranking: nothing annotatable in the input)"
    widths = [max(len(headers[i]), *(len(r[i]) for r in rows)) for i in range(len(headers))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers), fmt.format(*("-" * w for w in widths))]
    lines.extend(fmt.format(*r) for r in rows)
    return "\n".join(lines)


def _cmd_recommend(args: argparse.Namespace) -> int:
    if args.input is not None:
        text = args.input
    else:
        text = Path(args.input_file).read_text(encoding="utf-8")
    recommender = _build_recommender(args)
    request = RecommendRequest(
        input=text,
        input_type=args.input_type,
        output_type=args.output_type,
        weights=weights_from_optional(args.wc, args.wa, args.wd, args.ws),
        max_set_size=args.max_set_size,
        ontologies=tuple(
            a.strip() for a in (args.ontologies or "").split(",") if a.strip()
        ),
        algorithm=args.algorithm,
    )
    response = recommender.recommend(request, workers=args.workers)
    payload = serialize_response(response, recommender.repository)
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(_format_ranking_table(payload))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    recommender = _build_recommender(args)
    serve(recommender, host=args.host, port=args.port, static_dir=args.static_dir)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    from ontorec.evalharness import run_experiment
    from ontorec.fixtures import write_bundled_suite

    config = _load_config(args)
    if args.corpus_dir and args.fixtures_dir:
        report = run_experiment(args.corpus_dir, args.fixtures_dir, config, workers=args.workers)
    elif args.corpus_dir or args.fixtures_dir:
        print("evaluate: --corpus-dir and --fixtures-dir must be given together", file=sys.stderr)
        return 2
    else:
        with tempfile.TemporaryDirectory(prefix="ontorec-suite-") as tmp:
            corpus_dir, fixtures_dir = write_bundled_suite(tmp)
            report = run_experiment(corpus_dir, fixtures_dir, config, workers=args.workers)
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n", encoding="utf-8")
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.format_table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontorec",
        description="Rank ontologies (or ontology sets) for a text or keyword input.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recommend", help="rank ontologies for one input")
    _add_corpus_args(p_rec)
    source = p_rec.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", help="input text or comma-separated keywords")
    source.add_argument("--input-file", help="file containing the input")
    p_rec.add_argument("--input-type", choices=["text", "keywords"], default="text")
    p_rec.add_argument("--output-type", choices=["ontologies", "sets"], default="ontologies")
    p_rec.add_argument("--wc", type=float, help="coverage weight")
    p_rec.add_argument("--wa", type=float, help="acceptance weight")
    p_rec.add_argument("--wd", type=float, help="detail weight")
    p_rec.add_argument("--ws", type=float, help="specialization weight")
    p_rec.add_argument("--max-set-size", type=int, default=None,
                       help="maximum ontologies per set (2-4)")
    p_rec.add_argument("--ontologies", help="comma-separated acronym filter")
    p_rec.add_argument("--algorithm", choices=["v2", "v1"], default="v2")
    p_rec.add_argument("--format", choices=["json", "table"], default="table")
    p_rec.add_argument("--workers", type=int, default=1)
    p_rec.set_defaults(func=_cmd_recommend)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    _add_corpus_args(p_srv)
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000,
                       help="0 binds an ephemeral port (printed on startup)")
    p_srv.add_argument("--static-dir", help="directory with a built web UI to serve")
    p_srv.set_defaults(func=_cmd_serve)

    p_eval = sub.add_parser("evaluate", help="run the experiment harness")
    p_eval.add_argument("--corpus-dir", help="directory with corpus.jsonl and acceptance.json")
    p_eval.add_argument("--fixtures-dir", help="directory with dataset subdirectories")
    p_eval.add_argument("--config", help="JSON config file overriding defaults")
    p_eval.add_argument("--format", choices=["table", "json"], default="table")
    p_eval.add_argument("--out", help="also write the JSON report to this file")
    p_eval.add_argument("--workers", type=int, default=1)
    p_eval.set_defaults(func=_cmd_evaluate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RecommenderError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
