import json
import subprocess
import sys

import pytest

from gindex.cli import dump_json, main
from gindex.combinat import TypeKMu
from gindex.expansions import Expansion, PTable, p_value, type_monomial
from gindex.families import family_poly
from gindex.tableaux import G, KTableau, Tableau, g_index, g_index_k


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_text(capsys):
    code, out, _ = run(capsys, "expand", "--n", "4", "--format", "text")
    assert code == 0
    assert out.strip() == (
        "(c c1^3 + 4 c^2 c1 c2 + c^3 c3) f1 + (7 c^2 c1^2 + 4 c^3 c2) f2 + (6 c^3 c1) f3 + (c^4) f4"
    )
    assert run(capsys, "expand", "--n", "1")[1].strip() == "(c) f1"


def test_expand_types_json(capsys):
    code, out, _ = run(capsys, "expand", "--n", "3", "--grouping", "type", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert [r["p"] for r in data["types"]] == [1, 3, 1, 1]
    assert len(data["types"]) == 4


def test_expand_json_round_trip(capsys):
    _, out, _ = run(capsys, "expand", "--n", "5", "--format", "json")
    recomputed = dump_json(Expansion.from_json(json.loads(out)).to_json())
    assert recomputed == out.strip()


def test_expand_tableau_json_round_trip(capsys):
    _, out, _ = run(capsys, "expand", "--n", "4", "--grouping", "tableau", "--format", "json")
    data = json.loads(out)
    for rec in data["types"]:
        t = TypeKMu(rec["k"], tuple(p for p in rec["mu"] if p))
        assert rec["p"] == p_value(t) == sum(z["G"] for z in rec["tableaux"])
        assert rec["monomial"] == type_monomial(t).to_text()
        for z in rec["tableaux"]:
            kt = KTableau.from_json(z)
            assert {**kt.to_json(), "g": list(g_index_k(kt)), "G": G(kt)} == z
    assert dump_json(data) == out.strip()


def test_expand_latex(capsys):
    _, out, _ = run(capsys, "expand", "--n", "2", "--format", "latex")
    assert out.strip() == r"(cD)^{2}f &= (c c_1) \mathbf{f}_1 + (c^2) \mathbf{f}_2"


def test_expand_bad_n(capsys):
    assert run(capsys, "expand", "--n", "11")[0] == 2
    assert run(capsys, "expand", "--n", "0")[0] == 2


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "pkmu", "--nmax", "6")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "verify", "--suite", "thm1.1", "--nmax", "3", "--kmax", "2", "--format", "json")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "bogus")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from gindex import cli
    from gindex.report import CheckReport

    def broken(name, nmax, kmax):
        report = CheckReport(name)
        report.add("planted", False, "offending value: 42")
        return report

    monkeypatch.setattr(cli, "run_suite", broken)
    code, out, _ = run(capsys, "verify", "--suite", "pkmu", "--nmax", "2")
    assert code == 1
    assert "FAIL" in out and "offending value: 42" in out


def test_pkmu(capsys):
    assert run(capsys, "pkmu", "--k", "3", "--mu", "2,1,1", "--n", "7")[1].strip() == "896"
    code, out, _ = run(capsys, "pkmu", "--k", "2", "--mu", "1,0", "--method", "all")
    assert code == 0 and out.split() == ["recurrence:", "3", "tableau:", "3", "enumeration:", "3"]
    assert run(capsys, "pkmu", "--k", "3", "--mu", "2,1,1", "--n", "8")[0] == 2
    assert run(capsys, "pkmu", "--k", "3", "--mu", "1,2")[0] == 2


def test_pkmu_cache(capsys, tmp_path):
    cache = tmp_path / "p.json"
    assert run(capsys, "pkmu", "--k", "3", "--mu", "2,1,1,0,0,0", "--cache", str(cache))[1].strip() == "896"
    data = json.loads(cache.read_text())
    assert data["schema"] == PTable.SCHEMA and data["values"]["3|2,1,1"] == 896
    assert run(capsys, "pkmu", "--k", "3", "--mu", "2,1,1", "--cache", str(cache))[1].strip() == "896"


def test_family(capsys):
    assert run(capsys, "family", "--id", "andre", "--n", "3")[1].strip() == "x + 4x^2"
    code, out, _ = run(capsys, "family", "--id", "second-order", "--k", "2", "--nmax", "3", "--format", "json")
    data = json.loads(out)
    assert data["coefficients"] == [[1], [0, 1], [0, 1, 2], [0, 1, 8, 6]]
    rebuilt = {**data, "coefficients": [family_poly("second-order", n, 2).int_coeffs() for n in data["n"]]}
    assert dump_json(rebuilt) == out.strip()
    assert run(capsys, "family", "--id", "second-order", "--n", "3")[0] == 2


def test_family_bfile_and_method(capsys):
    out = run(capsys, "family", "--id", "eulerian", "--nmax", "3", "--format", "bfile")[1]
    assert out.split("\n")[:3] == ["1 1", "2 1", "3 1"]
    assert run(capsys, "family", "--id", "andre", "--n", "5", "--method", "trees")[1].strip() == "x + 26x^2 + 34x^3"
    assert run(capsys, "family", "--id", "andre", "--n", "5", "--method", "nope")[0] == 2


def test_tableaux_figure(capsys):
    code, out, _ = run(capsys, "tableaux", "--n", "7", "--shape-k", "2", "--shape-mu", "3,2", "--g-index")
    assert code == 0
    assert "4 6\n2 3 7\n-----\n1 5\ng = (1, 1, 1, 2, 1, 1, 2)  G = 4" in out


def test_tableaux_json_round_trip(capsys):
    _, out, _ = run(capsys, "tableaux", "--n", "4", "--g-index", "--format", "json")
    data = json.loads(out)
    assert data["count"] == 10
    assert sum(t["G"] for t in data["tableaux"]) == 24
    for rec in data["tableaux"]:
        t = Tableau.from_json(rec)
        assert {**t.to_json(), "g": list(g_index(t)), "G": G(t)} == rec


def test_tableaux_cap(capsys):
    assert run(capsys, "tableaux", "--n", "11")[0] == 3


def test_oracle(capsys):
    assert run(capsys, "oracle", "--stat", "des_final", "--n", "4")[1].strip() == "x + 11x^2 + 11x^3 + x^4"
    assert run(capsys, "oracle", "--stat", "alternating", "--n", "4")[1].strip() == "5"
    assert run(capsys, "oracle", "--stat", "stirling-lap", "--n", "2", "--format", "bfile")[1].split("\n")[:3] == [
        "0 0", "1 2", "2 1"]
    assert run(capsys, "oracle", "--stat", "des_final", "--n", "12")[0] == 3


def test_grammar_command(capsys):
    code, out, _ = run(capsys, "grammar", "--rules", "x -> x*y; y -> x", "--start", "x", "--n", "3")
    assert code == 0 and out.strip() == "x*y^3 + 4*x^2*y"
    code, out, _ = run(capsys, "grammar", "--rules", "x -> y; y -> y", "--u", "x", "--start", "y", "--n", "4", "--check")
    assert code == 0 and "pass" in out
    assert run(capsys, "grammar", "--rules", "x -> (y", "--n", "1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gindex", "pkmu", "--k", "2", "--mu", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"


def test_help(capsys):
    assert run(capsys, "--help")[0] == 0
