import json
import subprocess
import sys

import pytest

from kappalg.cli import run
from kappalg.decide import replay_certificate
from kappalg.io import export_semigroup, semigroup_from_spec


@pytest.fixture
def files(tmp_path):
    lang = tmp_path / "L1.json"
    lang.write_text(json.dumps({"alphabet": ["a", "b"], "words": ["a", "b", "aa", "ab", "bb", "aaa", "aab"]}))
    group = tmp_path / "C2.json"
    group.write_text(json.dumps({"type": "cyclic", "n": 2}))
    f = tmp_path / "f.json"
    f.write_text(json.dumps([{"word": "ba", "g": "g"}, {"word": "aaaa", "g": "g"}]))
    one = tmp_path / "A1.json"
    one.write_text(json.dumps({"alphabet": ["a"], "words": ["a"]}))
    f1 = tmp_path / "f1.json"
    f1.write_text(json.dumps([{"word": "aa", "g": "g"}]))
    return tmp_path


def out_of(capsys, argv):
    code = run(argv)
    cap = capsys.readouterr()
    return code, cap.out.strip(), cap.err


def test_canon(capsys):
    code, out, _ = out_of(capsys, ["canon", "(bababa)^w b^(w-3) b (bb)^(w+1)"])
    assert code == 0 and out == "b(ab)^w b^(w-1)"
    code, out, _ = out_of(capsys, ["--json", "canon", "(abab)^w"])
    data = json.loads(out)
    assert data["canonical"] == "(ab)^w" and data["trace"][0]["kind"] == "Contraction1"


def test_sc(capsys, files):
    code, out, _ = out_of(capsys, ["sc", "--lang", str(files / "L1.json"), "aaaaabaa"])
    assert code == 0 and out == "(aaa, aaaa, aaa, aaaa, aaa, aaab, aab, ba, aa)"


def test_sc_reports_closure(capsys, tmp_path):
    lang = tmp_path / "L.json"
    lang.write_text(json.dumps({"alphabet": ["a", "b"], "words": ["aab"]}))
    code, out, err = out_of(capsys, ["sc", "--lang", str(lang), "ab"])
    assert code == 0 and "closure" in err


def test_decide_with_certificate(capsys, tmp_path):
    cert = tmp_path / "out.json"
    code, out, _ = out_of(capsys, ["decide", "a^(w+1)", "a^(w+2)", "--variety", "lg", "--certificate", str(cert)])
    assert code == 0 and out.splitlines()[0] == "equal: false"
    assert replay_certificate(json.loads(cert.read_text()))
    code, out, _ = out_of(capsys, ["decide", "(bababa)^w b^(w-3) b (bb)^(w+1)", "b(ab)^w b^(w-1)"])
    assert out.splitlines()[0] == "equal: true"


def test_eval(capsys):
    assert out_of(capsys, ["eval", "a^w", "--sgp", "S1", "--assign", "a=a"])[1] == "(a, g, a)"
    assert out_of(capsys, ["eval", "a^(w-1)", "--sgp", "C2", "--assign", "a=g"])[1] == '"g"'


def test_build_and_presentation(capsys, files):
    export = files / "S.json"
    code, out, _ = out_of(capsys, ["build-sgp", "--lang", str(files / "A1.json"), "--group", str(files / "C2.json"),
                                   "--f", str(files / "f1.json"), "--check", "--export", str(export), "--table"])
    assert code == 0 and out.startswith("|S| = 9")
    data = json.loads(export.read_text())
    assert data["size"] == 9 and len(data["table"]) == 9
    code, out, _ = out_of(capsys, ["--json", "presentation", "--lang", str(files / "L1.json"),
                                   "--group", str(files / "C2.json"), "--f", str(files / "f.json")])
    assert json.loads(out)["verified"] is True


def test_check_local_group(capsys):
    assert out_of(capsys, ["check-local-group", "--sgp", "S1"])[1] == "local group: true"
    assert out_of(capsys, ["check-local-group", "--sgp", "semilattice"])[1] == "local group: false"


def test_selftest(capsys):
    code, out, _ = out_of(capsys, ["selftest", "--seed", "1", "--count", "3"])
    assert code == 0 and "FAILED" not in out


@pytest.mark.parametrize("argv", [
    ["canon", "(ab"],
    ["canon", "(a^w b)^w"],
    ["decide", "(a^w b a^w)^w", "a^w"],
    ["eval", "a", "--sgp", "nosuch"],
    ["eval", "a", "--sgp", "C2", "--assign", "a"],
    ["sc", "--lang", "/nonexistent.json", "a"],
])
def test_errors_exit_nonzero(capsys, argv):
    code, _, err = out_of(capsys, argv)
    assert code != 0 and err


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "kappalg", "canon", "(abab)^w"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "(ab)^w"


def test_export_limit():
    S = semigroup_from_spec("T3")
    assert export_semigroup(S, table=False)["size"] == 27
    with pytest.raises(ValueError):
        export_semigroup(S, limit=10)


def test_table_spec_round_trip():
    S = semigroup_from_spec({"type": "table", "elements": ["1", "0"], "table": [["1", "0"], ["0", "0"]]})
    assert S.size() == 2
