import json
import subprocess
import sys

import jsonschema
import pytest

from laurentkit.cli.main import main
from laurentkit.cli.report import load_schema
from laurentkit.cli.session import format_session, parse_session
from laurentkit.errors import ParseError

from conftest import CORPUS

CORPUS_FILES = sorted(CORPUS.glob("*.ring"))


def run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.name)
def test_corpus_round_trip(path):
    s = parse_session(path.read_text(), str(path))
    again = parse_session(format_session(s))
    assert again.structure() == s.structure()
    assert format_session(again) == format_session(s)


@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.name)
def test_corpus_json_matches_schema(path, capsys):
    code, doc = run_json(capsys, "run", str(path))
    jsonschema.validate(doc, load_schema())
    assert code == (2 if path.name == "violate.ring" else 0)


def test_error_documents_match_schema(tmp_path, capsys):
    empty = tmp_path / "empty.ring"
    empty.write_text("")
    code, doc = run_json(capsys, "neutral", str(empty))
    assert code == 3 and doc["status"] == "parse_error"
    jsonschema.validate(doc, load_schema())


def test_parse_error_location(tmp_path, capsys):
    bad = tmp_path / "bad.ring"
    bad.write_text("ring A over QQ\nvars x, y\nrelations x^2 - q\n")
    code, doc = run_json(capsys, "neutral", str(bad))
    assert code == 3
    assert doc["error"]["line"] == 3 and doc["error"]["column"] == 17


def test_unknown_statement_is_parse_error():
    with pytest.raises(ParseError) as exc:
        parse_session("torus T rank 1 over QQ\nfrobnicate T\n")
    assert exc.value.line == 2


def test_missing_file_is_generic_error(tmp_path, capsys):
    assert main(["neutral", str(tmp_path / "nope.ring")]) == 1
    assert "error" in capsys.readouterr().err


def test_neutral_text_output(capsys):
    assert main(["neutral", str(CORPUS / "cubic.ring")]) == 0
    out = capsys.readouterr().out
    assert "algebra_neutral: true" in out and "rank 0" in out


def test_normalize_trace_json(capsys):
    code, doc = run_json(capsys, "normalize", str(CORPUS / "t23_zz.ring"), "--trace")
    data = doc["results"][0]["data"]
    assert code == 0 and data["domain"] == "ZZ[1/2]"
    assert data["steps"][0]["m"] == -1 and data["steps"][0]["w"] == "1/2*t"


def test_characterize_reports_counterexample(capsys):
    code, doc = run_json(capsys, "characterize", str(CORPUS / "skew_base.ring"))
    data = doc["results"][0]["data"]
    assert code == 0 and data["status"] == "false" and data["counterexample"] == [0, 1]


def test_auto_images(capsys):
    assert main(["auto", str(CORPUS / "elements.ring"), "--element", "p"]) == 0
    assert "image of p: 12*s^2*z" in capsys.readouterr().out


def test_selfcheck(capsys):
    code, doc = run_json(capsys, "selfcheck", "--seed", "11")
    checks = doc["results"][0]["data"]["checks"]
    assert code == 0 and all(v["passed"] == v["total"] for v in checks.values())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "laurentkit", "run", str(CORPUS / "violate.ring")], capture_output=True, text=True
    )
    assert proc.returncode == 2
    assert "HypothesisFailed" in proc.stdout + proc.stderr
