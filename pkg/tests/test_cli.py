"""Command line interface."""

from __future__ import annotations

import json
import select
import subprocess
import sys
import time
import urllib.request

import pytest

from ontorec.cli import main
from ontorec.fixtures import PHARMA_SENTENCE, pharma_records, write_corpus


@pytest.fixture(scope="module")
def corpus_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "corpus.jsonl"
    write_corpus(pharma_records(), path)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_missing_required_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["recommend"])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        main(["recommend", "--corpus", "x.jsonl"])  # no --input
    with pytest.raises(SystemExit):
        main([])  # no subcommand


def test_recommend_table_output(capsys, corpus_path):
    code, out, err = run(
        capsys, "recommend", "--corpus", corpus_path, "--input", PHARMA_SENTENCE
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == [
        "pos", "ontologies", "final", "cov", "acc", "det", "spec", "anns",
    ]
    assert any("ABXONTO" in line for line in lines)
    assert any("ENTONTO" in line for line in lines)


def test_recommend_json_output(capsys, corpus_path):
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path,
        "--input", PHARMA_SENTENCE, "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["total_candidates"] == 2
    assert data["entries"][0]["position"] == 1


def test_recommend_from_input_file(capsys, corpus_path, tmp_path):
    input_file = tmp_path / "input.txt"
    input_file.write_text(PHARMA_SENTENCE, encoding="utf-8")
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path,
        "--input-file", str(input_file), "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["total_candidates"] == 2


def test_ontology_filter_flag(capsys, corpus_path):
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path,
        "--input", PHARMA_SENTENCE, "--ontologies", "ENTONTO", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert [e["ontologies"] for e in data["entries"]] == [["ENTONTO"]]


def test_sets_output(capsys, corpus_path):
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path,
        "--input", PHARMA_SENTENCE, "--output-type", "sets", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["entries"][0]["ontologies"] == ["ABXONTO", "ENTONTO"]


def test_legacy_algorithm_flag(capsys, corpus_path):
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path,
        "--input", PHARMA_SENTENCE, "--algorithm", "v1", "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["algorithm"] == "v1"


def test_custom_weights_flags(capsys, corpus_path):
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path, "--input", PHARMA_SENTENCE,
        "--wc", "0", "--wa", "0", "--wd", "0", "--ws", "1", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["entries"][0]["ontologies"] == ["ENTONTO"]


def test_invalid_weights_exit_1(capsys, corpus_path):
    code, out, err = run(
        capsys, "recommend", "--corpus", corpus_path,
        "--input", PHARMA_SENTENCE, "--wc", "0.5",
    )
    assert code == 1
    assert "InvalidWeights" in err
    assert out == ""


def test_missing_corpus_exit_1(capsys):
    code, _, err = run(capsys, "recommend", "--corpus", "/no/such/file.jsonl", "--input", "x")
    assert code == 1
    assert "error" in err


def test_config_file_flag(capsys, corpus_path, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"ranking_size": 1}), encoding="utf-8")
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path, "--input", PHARMA_SENTENCE,
        "--config", str(config), "--format", "json",
    )
    assert code == 0
    assert len(json.loads(out)["entries"]) == 1


def test_empty_ranking_table_message(capsys, corpus_path):
    code, out, _ = run(
        capsys, "recommend", "--corpus", corpus_path, "--input", "nothing matches"
    )
    assert code == 0
    assert "empty ranking" in out


# ---------------------------------------------------------------------------
# evaluate


def test_evaluate_bundled_suite_table(capsys):
    code, out, _ = run(capsys, "evaluate")
    assert code == 0
    for name in ("duplicate_class", "multiword", "set_cover", "MEAN"):
        assert name in out


def test_evaluate_json_and_out_file(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(capsys, "evaluate", "--format", "json", "--out", str(out_path))
    assert code == 0
    printed = json.loads(out)
    saved = json.loads(out_path.read_text(encoding="utf-8"))
    assert printed == saved
    assert {d["dataset"] for d in printed["datasets"]} == {
        "duplicate_class", "multiword", "set_cover",
    }


def test_evaluate_requires_both_dirs(capsys, tmp_path):
    code, _, err = run(capsys, "evaluate", "--corpus-dir", str(tmp_path))
    assert code == 2
    assert "together" in err


def test_evaluate_missing_fixture_dirs(capsys, tmp_path):
    code, _, err = run(
        capsys, "evaluate", "--corpus-dir", str(tmp_path), "--fixtures-dir", str(tmp_path)
    )
    assert code == 1
    assert "not found" in err


# ---------------------------------------------------------------------------
# serve


def read_line_with_timeout(stream, timeout):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        ready, _, _ = select.select([stream], [], [], 0.1)
        if ready:
            return stream.readline()
    raise AssertionError("server did not announce its address in time")


def test_serve_binds_ephemeral_port(corpus_path):
    proc = subprocess.Popen(
        [sys.executable, "-m", "ontorec.cli", "serve",
         "--corpus", corpus_path, "--port", "0"],
        stdout=subprocess.PIPE,
        stderr=subprocess.DEVNULL,
        text=True,
    )
    try:
        line = read_line_with_timeout(proc.stdout, timeout=15)
        assert line.startswith("serving on http://127.0.0.1:")
        url = line.split()[-1]
        payload = None
        for _ in range(50):
            try:
                with urllib.request.urlopen(f"{url}/health", timeout=2) as resp:
                    payload = json.loads(resp.read())
                break
            except OSError:
                time.sleep(0.1)
        assert payload == {"status": "ok", "ontologies": 2}
    finally:
        proc.terminate()
        proc.wait(timeout=10)
