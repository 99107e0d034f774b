import json

import pytest

from s3links.cli import main
from s3links.notation import emit_diagram, parse_diagram, plat_diagram
from s3links.solver import is_valid_coloring, parse_coloring

from oracles import trefoil


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.mark.parametrize("family, n_set", [
    ("T(2,4)", [1, 2, 4]),
    ("T(2,3)", [1, 3]),
    ("T(2,2)", [1, 2]),
])
def test_classify_json(capsys, family, n_set):
    code, report = run_json(capsys, "classify", family)
    assert code == 0
    assert report["n"] == n_set
    assert set(report["counts"]) == {str(n) for n in n_set}
    assert report["command"] == "classify" and "elapsed_s" in report


def test_classify_j35(capsys):
    code, report = run_json(capsys, "classify", "J(3,5)")
    assert 4 in report["n"] and 3 not in report["n"]


def test_classify_text(capsys):
    code, out, _ = run(capsys, "classify", "T(2,4)")
    assert code == 0
    assert out.splitlines()[0] == "T(2,4): n in {1, 2, 4}"


def test_classify_diagram_file(capsys, tmp_path):
    path = tmp_path / "trefoil.txt"
    path.write_text(emit_diagram(trefoil()))
    code, report = run_json(capsys, "classify", str(path))
    assert code == 0 and report["n"] == [1, 3]


def test_det(capsys):
    assert run_json(capsys, "det", "J(3,5)")[1]["determinant"] == 16
    code, out, _ = run(capsys, "det", "T(2,7)")
    assert code == 0 and out.strip() == "T(2,7): determinant 7"


def test_solve(capsys):
    code, report = run_json(capsys, "solve", "T(2,3)")
    assert code == 0 and report["count"] == 11
    assert ["s", "s", "s"] in report["colorings"]


def test_gen_writes_file(capsys, tmp_path):
    out = tmp_path / "c.txt"
    code, _, _ = run(capsys, "gen", "C(2,4,-2)", "-o", str(out))
    assert code == 0
    assert parse_diagram(out.read_text()) == plat_diagram(2, 4, -2)


def test_promote_t24(capsys):
    code, report = run_json(capsys, "promote", "T(2,4)")
    assert code == 0 and report["passed"]
    d = parse_diagram(report["diagram"])
    c = parse_coloring(report["coloring"], d)
    assert len(set(c)) == 5 and is_valid_coloring(d, c)


def test_promote_j35(capsys):
    assert run(capsys, "promote", "J(3,5)")[0] == 0


def test_promote_trefoil_fails(capsys):
    code, report = run_json(capsys, "promote", "T(2,3)")
    assert code == 1
    assert report["error"] == "no 4-coloring"
    assert parse_diagram(report["diagram"]) == plat_diagram(3)
    code, out, _ = run(capsys, "promote", "T(2,3)")
    assert "no 4-coloring" in out


def test_promote_with_coloring_file(capsys, tmp_path):
    dpath = tmp_path / "d.txt"
    dpath.write_text(emit_diagram(plat_diagram(2, 2, 2)))
    cpath = tmp_path / "c.txt"
    code, report = run_json(capsys, "classify", str(dpath))
    words = report["witnesses"]["4"]
    cpath.write_text("".join(f"arc {i} {w}\n" for i, w in enumerate(words)))
    code, report = run_json(capsys, "promote", str(dpath), "--coloring", str(cpath))
    assert code == 0 and report["passed"]


def test_promote_rejects_invalid_coloring(capsys, tmp_path):
    cpath = tmp_path / "c.txt"
    cpath.write_text("arc 0 s\narc 1 t\narc 2 t\n")
    dpath = tmp_path / "d.txt"
    dpath.write_text(emit_diagram(trefoil()))
    code, _, err = run(capsys, "promote", str(dpath), "--coloring", str(cpath))
    assert code == 2 and "not valid" in err


def test_promote_three_color_coloring_fails(capsys, tmp_path):
    dpath = tmp_path / "d.txt"
    dpath.write_text(emit_diagram(trefoil()))
    cpath = tmp_path / "c.txt"
    cpath.write_text("arc 0 s\narc 1 t\narc 2 sts\n")
    code, report = run_json(capsys, "promote", str(dpath), "--coloring", str(cpath))
    assert code == 1 and not report["passed"]


def test_verify_torus(capsys):
    code, report = run_json(capsys, "verify-torus", "--q-max", "12")
    assert code == 0 and report["passed"]
    rows = {r["q"]: r for r in report["results"]}
    assert {3, 4, 5} <= set(rows[12]["link_n_set"])
    assert rows[4]["determinant"] == 4 and 4 in rows[4]["n_set"]
    assert rows[2]["n_set"] == [1, 2]


def test_verify_torus_text(capsys):
    code, out, _ = run(capsys, "verify-torus", "--q-max", "4")
    assert code == 0
    assert out.splitlines()[-1] == "3/3 passed"


def test_verify_j(capsys):
    code, report = run_json(capsys, "verify-j", "--k-max", "5", "--l-max", "5")
    assert code == 0
    rows = {(r["k"], r["l"]): r for r in report["results"]}
    assert 4 in rows[3, 5]["n_set"] and 3 not in rows[3, 5]["n_set"]
    assert rows[3, 5]["determinant"] == 16
    assert rows[1, 1]["determinant"] == 2 and 4 not in rows[1, 1]["n_set"]
    assert 3 not in rows[3, 3]["n_set"] and 4 not in rows[3, 3]["n_set"]


def test_verify_conway_is_deterministic(capsys):
    a = run_json(capsys, "verify-conway", "--seed", "7", "--samples", "20")[1]
    b = run_json(capsys, "verify-conway", "--seed", "7", "--samples", "20")[1]
    assert a["passed"]
    assert [r["entries"] for r in a["results"]] == [r["entries"] for r in b["results"]]
    assert a["inputs"] == {"seed": 7, "samples": 20, "max_crossings": 16}
    assert all(sum(abs(e) for e in r["entries"]) <= 16 for r in a["results"])


@pytest.mark.parametrize("argv", [
    ["classify", "C(2,0)"],
    ["classify", "not-a-file"],
    ["det", "T(3,3)"],
    ["verify-torus", "--q-max", "1"],
    ["verify-conway", "--samples", "0"],
])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_bad_diagram_file_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("arcs 2\nx + 0 1 1\n")
    code, _, err = run(capsys, "classify", str(path))
    assert code == 2 and "arc 0" in err


def test_failing_row_carries_reparseable_diagram(monkeypatch, capsys):
    # break the determinant so every row fails, then check the counterexamples
    import s3links.verify as verify
    monkeypatch.setattr(verify, "determinant", lambda d: -1)
    code, report = run_json(capsys, "verify-torus", "--q-max", "3")
    assert code == 1 and not report["passed"]
    for row in report["results"]:
        assert parse_diagram(row["diagram"]) == plat_diagram(row["q"])
