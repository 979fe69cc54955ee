import json
import subprocess
import sys

import pytest

from ttbraid.cli import main, parse_braid, parse_range, UsageError
from ttbraid.braid import BraidWord


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_range(self):
        assert parse_range("2..8") == range(2, 9)
        assert parse_range("5") == range(5, 6)
        with pytest.raises(UsageError):
            parse_range("8..2")
        with pytest.raises(UsageError):
            parse_range("a..b")

    def test_braid_forms(self, tmp_path):
        w = BraidWord(4, (1, -3, 2))
        assert parse_braid("4:1,-3,2") == w
        assert parse_braid("4:[1, -3, 2]") == w
        assert parse_braid(json.dumps(w.to_json())) == w
        f = tmp_path / "w.json"
        f.write_text(json.dumps(w.to_json()))
        assert parse_braid(str(f)) == w
        assert parse_braid("3:") == BraidWord(3)
        for bad in ("{not json", "4:1,x", "nonsense", '{"strands": 2, "word": [5]}'):
            with pytest.raises(UsageError):
                parse_braid(bad)


class TestCommands:
    def test_slope(self, capsys):
        assert run(capsys, "slope", "17", "5", "2", "-1")[:2] == (0, "81\n")

    def test_eq_full_twist(self, capsys):
        up = "5:" + ",".join(["1,2,3,4"] * 5)
        down = "5:" + ",".join(["4,3,2,1"] * 5)
        assert run(capsys, "eq", up, down)[:2] == (0, "true\n")
        assert run(capsys, "eq", "3:1,2", "3:2,1")[:2] == (1, "false\n")

    def test_braid_round_trip(self, capsys, tmp_path):
        code, out, _ = run(capsys, "braid", "17", "5", "2", "-1", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["strands"] == 5 and data["word"][-2:] == [-1, -1]
        f = tmp_path / "k.json"
        f.write_text(out)
        from_file = run(capsys, "nf", str(f), "--json")[1]
        inline = run(capsys, "nf", json.dumps(data), "--json")[1]
        assert from_file == inline
        assert run(capsys, "components", str(f))[1] == "1\n"

    def test_nf(self, capsys):
        code, out, _ = run(capsys, "nf", "3:-1", "--json")
        assert json.loads(out) == {"strands": 3, "inf": -1, "factors": [[3, 1, 2]]}
        assert run(capsys, "nf", "3:-1")[1] == "B_3: Delta^-1 . [3,1,2]\n"

    def test_classify_and_surgery(self, capsys):
        code, out, _ = run(capsys, "classify", "17", "5", "2", "-1", "--json")
        data = json.loads(out)
        assert data["verdict"] == "PrimitiveSeifert" and data["seifert_H"] == [3, 2]
        code, out, _ = run(capsys, "surgery", "17", "5", "2", "-1", "--json")
        assert json.loads(out)["multiplicities"] == [3, 2, -3]
        assert "PrimitiveSeifert" in run(capsys, "classify", "17", "5", "2", "-1")[1]

    def test_alex(self, capsys):
        assert run(capsys, "alex", "2:1,1,1")[1] == "1 - t + t^2\n"
        assert run(capsys, "alex", "3:1,1")[0] == 2
        assert run(capsys, "alex", "3:1,2,1,2", "--degree-cap", "2")[0] == 2

    def test_conj(self, capsys):
        code, out, _ = run(capsys, "conj", "3:1", "3:2", "--json")
        data = json.loads(out)
        assert code == 0 and data["status"] == "conjugate"
        w = json.dumps(data["witness"])
        assert run(capsys, "conj", "3:1", "3:2", w)[:2] == (0, "true\n")
        assert run(capsys, "conj", "3:1", "3:-1")[0] == 1

    def test_verify_p1(self, capsys):
        code, out, _ = run(capsys, "verify", "p1", "--r", "2..8", "--json")
        data = json.loads(out)
        assert code == 0
        assert len(data["reports"]) == 7
        assert all(r["status"] == "verified" for r in data["reports"])

    def test_text_and_json_agree(self, capsys):
        _, text, _ = run(capsys, "verify", "chain", "--range", "2..3")
        _, js, _ = run(capsys, "verify", "chain", "--range", "2..3", "--json")
        statuses = [r["status"] for r in json.loads(js)["reports"]]
        assert text.count("[verified]") == statuses.count("verified") == 18

    def test_stable_output(self, capsys):
        a = run(capsys, "verify", "p1th", "--range", "3..4", "--k", "2", "--json", "--no-timing")[1]
        b = run(capsys, "verify", "p1th", "--range", "3..4", "--k", "2", "--json", "--no-timing")[1]
        assert a == b

    def test_sweep(self, capsys):
        code, out, _ = run(capsys, "sweep", "--p", "17..18", "--q", "5", "--only", "PrimitiveSeifert", "--json")
        data = json.loads(out)
        assert code == 0 and data["violations"] == 0
        assert {"p": 17, "q": 5, "r": 2, "n": -1} in [row["knot"] for row in data["rows"]]


class TestErrors:
    def test_usage(self, capsys):
        assert run(capsys, "verify", "bogus")[0] == 2
        assert run(capsys, "slope", "1")[0] == 2
        assert run(capsys, "eq", "3:1", "4:1")[0] == 2
        assert run(capsys, "verify", "p1", "--range", "1..3")[0] == 2
        assert run(capsys, "braid", "5", "3", "4", "-1")[0] == 2

    def test_caps(self, capsys, monkeypatch):
        assert run(capsys, "nf", "5:1", "--strands-cap", "4")[0] == 2
        assert run(capsys, "verify", "p1", "--range", "2..40")[0] == 2
        monkeypatch.setenv("TTBRAID_STRANDS_CAP", "4")
        assert run(capsys, "nf", "5:1")[0] == 2
        monkeypatch.setenv("TTBRAID_JSON", "1")
        assert json.loads(run(capsys, "slope", "17", "5", "2", "-1")[1])["slope"] == 81

    def test_inconclusive_exits_1(self, capsys):
        a = "5:1,-3,3,-2,-2,-4,-3,-4,-1,3,-3,-4,-2,2,2,-2,-3,-2,-4,-3"
        b = ("5:4,-2,4,4,-4,-3,1,-3,3,-2,-2,-4,-3,-4,-1,3,-3,-4,-2,2,2,-2,-3,-2,-4,-3,"
             "3,4,-4,-4,2,-4")
        code, out, _ = run(capsys, "conj", a, b, "--budget", "1", "--json")
        assert code == 1 and json.loads(out)["status"] == "inconclusive"
        code, out, _ = run(capsys, "conj", a, b, "--json")
        assert code == 0 and json.loads(out)["status"] == "conjugate"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ttbraid", "slope", "18", "5", "3", "-1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "81"
