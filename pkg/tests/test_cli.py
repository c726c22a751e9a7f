import csv
import io
import json
import subprocess
import sys

import pytest

from assocspec.cli import run


@pytest.fixture
def graph_file(tmp_path):
    def make(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def call(argv):
    out = io.StringIO()
    code = run(argv, out=out)
    return code, out.getvalue()


def test_identity_on_single_edge(graph_file):
    code, out = call(["identity", "-g", graph_file("u v\n"), "-t", "x1(x2x3)", "-u", "(x1x2)x3"])
    assert code == 0
    assert out.strip() == "NOT SATISFIED (|Hom(G(t),G)|=0, |Hom(G(u),G)|=1)"


def test_identity_satisfied_json(graph_file):
    c2 = graph_file("a b\nb a\n")
    code, out = call(["identity", "-g", c2, "-t", "(x1(x2x3))x4", "-u", "x1(x2(x3x4))", "--json"])
    data = json.loads(out)
    assert code == 0 and data["satisfied"] is True and data["hom_t"] == data["hom_u"] == 2


def test_identity_size_mismatch(graph_file):
    code, _ = call(["identity", "-g", graph_file("u v\n"), "-t", "x1x2", "-u", "x1(x2x3)"])
    assert code == 1


def test_spectrum_c2(graph_file):
    code, out = call(["spectrum", "-g", graph_file("a b\nb a\n"), "-n", "6"])
    assert code == 0
    assert [r["s_n"] for r in json.loads(out)["spectrum"]] == [1, 1, 2, 4, 8, 16]
    code, out = call(["spectrum", "-g", graph_file("a b\nb a\n"), "-n", "6", "--csv",
                      "--method", "table"])
    rows = list(csv.reader(io.StringIO(out)))
    assert [int(r[1]) for r in rows[1:]] == [1, 1, 2, 4, 8, 16]


def test_methods_agree(graph_file):
    f = graph_file("u v\nv w\nw w\n")
    outs = [json.loads(call(["spectrum", "-g", f, "-n", "6", "--method", m])[1])
            for m in ("hom", "table", "auto")]
    assert len({tuple(r["s_n"] for r in o["spectrum"]) for o in outs}) == 1


def test_fine(graph_file):
    code, out = call(["fine", "-g", graph_file("a b\nb a\n"), "-n", "4"])
    data = json.loads(out)
    assert code == 0 and data["s_n"] == 4
    grouped = [c for c in data["classes"] if c["size"] == 2]
    assert grouped[0]["members"] == ["0,1,2,1", "0,1,2,3"]
    reps = [c["representative"] for c in data["classes"]]
    assert reps == sorted(reps)
    code, out = call(["fine", "-g", graph_file("a b\nb a\n"), "-n", "4", "--csv"])
    assert out.splitlines()[0] == "class,representative,term,size,members"


def test_classify(graph_file):
    code, out = call(["classify", "-g", graph_file("a b\nb a\n")])
    data = json.loads(out)
    assert code == 0
    assert data["associative"] is False and data["antiassociative"] is False
    assert data["undirected"]["class"] == "powers-of-two"
    assert data["evidence"]["witness_verified"] is True
    code, out = call(["classify", "-g", graph_file("u v\n")])
    assert "undirected" not in json.loads(out)


def test_witness(graph_file):
    code, out = call(["witness", "-g", graph_file("a a\n")])
    lines = out.splitlines()
    assert code == 0 and " = " in lines[0] and lines[1] == "verified: True"
    code, out = call(["witness", "-g", graph_file("a a\n"), "--no-verify"])
    assert len(out.splitlines()) == 1


def test_witness_for_antiassociative_is_error(graph_file, capsys):
    code, _ = call(["witness", "-g", graph_file("u u\nu v\nv v\n")])
    assert code == 1
    assert "antiassociative" in capsys.readouterr().err


def test_enumerate():
    assert call(["enumerate", "-n", "3", "--as", "term"])[1].splitlines() == ["(x1x2)x3", "x1(x2x3)"]
    assert call(["enumerate", "-n", "3", "--as", "dyck"])[1].splitlines() == ["UDUD", "UUDD"]
    assert len(call(["enumerate", "-n", "6"])[1].splitlines()) == 42


def test_table_t1():
    code, out = call(["table", "--which", "T1", "--max-n", "6"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["h", "n=1", "n=2", "n=3", "n=4", "n=5", "n=6"]
    assert rows[1] == ["2", "1", "1", "2", "4", "8", "16"]
    assert rows[2][-1] == "34"


def test_table_t2():
    code, out = call(["table", "--which", "T2", "--max-n", "5", "--json"])
    data = json.loads(out)
    assert code == 0 and len(data) == 10 and all(r["matches"] for r in data)


def test_formulas():
    code, out = call(["formulas", "--family", "cycle", "--param", "3", "-n", "5"])
    assert [v["value"] for v in json.loads(out)["values"]] == [1, 1, 2, 5, 13]
    code, out = call(["formulas", "--family", "two-vertex", "--case", "edge", "-n", "4", "--csv"])
    assert out.splitlines() == ["n,value", "1,1", "2,1", "3,2", "4,2"]
    assert call(["formulas", "--family", "two-vertex", "-n", "4"])[0] == 2


@pytest.mark.parametrize("argv", [[], ["spectrum"], ["bogus"], ["enumerate", "-n", "0"]])
def test_usage_errors(argv, capsys):
    assert call(argv)[0] == 2


def test_parse_errors(graph_file, tmp_path):
    assert call(["spectrum", "-g", graph_file("a b c\n"), "-n", "3"])[0] == 3
    assert call(["spectrum", "-g", str(tmp_path / "missing.txt"), "-n", "3"])[0] == 3
    assert call(["identity", "-g", graph_file("u v\n"), "-t", "x1x3", "-u", "x1x2"])[0] == 3


def test_budget_exit(graph_file):
    assert call(["spectrum", "-g", graph_file("a a\n"), "-n", "9", "--max-trees", "10"])[0] == 4
    assert call(["enumerate", "-n", "9", "--max-trees", "10"])[0] == 4


def test_module_entry_point(tmp_path):
    p = tmp_path / "c2.txt"
    p.write_text("a b\nb a\n")
    res = subprocess.run([sys.executable, "-m", "assocspec", "spectrum", "-g", str(p), "-n", "4",
                          "--csv"], capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[-1] == "4,4"
