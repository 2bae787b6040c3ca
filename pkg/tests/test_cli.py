import json

import pytest

from romapprox import exact
from romapprox.cli import main
from romapprox.instances import load_digraph, load_graph

TRI = "p 3 3\ne 1 2\ne 2 3\ne 1 3\n"
FAM = "h 4 3 2\ns 1 2\ns 2 3\ns 3 4\n"
C6 = "p 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n"

REPORT_KEYS = {
    "algorithm", "params", "solution", "size", "valid", "meter", "runtime_ms",
}
METER_KEYS = {
    "charged_peak_words", "primitive_words", "input_accesses", "pass_estimate",
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_solve_compare_exact(tmp_path, capsys):
    path = write(tmp_path, "tri.gr", TRI)
    code, out = run(
        capsys, "solve", "--problem", "vc", "--algorithm", "bounded-degree",
        "--input", path, "--compare-exact",
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) == REPORT_KEYS | {"opt", "ratio"}
    assert set(report["meter"]) == METER_KEYS
    assert report["valid"] is True
    assert report["size"] == 2
    assert report["opt"] == 2
    assert report["ratio"] == 1.0


def test_solve_report_keys_without_compare(tmp_path, capsys):
    path = write(tmp_path, "tri.gr", TRI)
    code, out = run(
        capsys, "solve", "--problem", "vc", "--algorithm", "bounded-degree",
        "--input", path,
    )
    assert code == 0
    assert set(json.loads(out)) == REPORT_KEYS


def test_solve_no_verdict(tmp_path, capsys):
    path = write(tmp_path, "fam.hg", FAM)
    code, out = run(
        capsys, "solve", "--problem", "hs", "--algorithm", "staggered",
        "--epsilon", "1.0", "--k", "0", "--input", path,
    )
    assert code == 2
    report = json.loads(out)
    assert set(report) == {"algorithm", "params", "verdict"}
    assert report["verdict"] == "NO"


def test_solve_deterministic(tmp_path, capsys):
    path = write(tmp_path, "c6.gr", C6)
    argv = (
        "solve", "--problem", "ds", "--algorithm", "regular", "--d", "2",
        "--input", path, "--compare-exact",
    )
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    strip = lambda text: {k: v for k, v in json.loads(text).items() if k != "runtime_ms"}
    a, b = strip(first), strip(second)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert a["solution"] == [1, 3, 4, 6]
    assert a["opt"] == 2


def test_solve_usage_errors(tmp_path, capsys):
    path = write(tmp_path, "tri.gr", TRI)
    code, _ = run(
        capsys, "solve", "--problem", "vc", "--algorithm", "avg-degree",
        "--input", path,
    )
    assert code == 1
    code, _ = run(
        capsys, "solve", "--problem", "hs", "--algorithm", "staggered",
        "--input", write(tmp_path, "fam.hg", FAM),
    )
    assert code == 1
    with pytest.raises(SystemExit) as info:
        main(["solve", "--problem", "nope", "--algorithm", "tree", "--input", path])
    assert info.value.code == 1


def test_solve_check_structure(tmp_path, capsys):
    c4 = write(tmp_path, "c4.gr", "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n")
    code, _ = run(
        capsys, "solve", "--problem", "ds", "--algorithm", "c4free",
        "--input", c4, "--check-structure",
    )
    assert code == 1
    code, out = run(
        capsys, "solve", "--problem", "ds", "--algorithm", "c4free",
        "--input", write(tmp_path, "c6.gr", C6), "--check-structure",
    )
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_solve_space_audit_same_solution(tmp_path, capsys):
    path = write(tmp_path, "c6.gr", C6)
    base = (
        "solve", "--problem", "vc", "--algorithm", "bounded-degree",
        "--input", path,
    )
    _, plain = run(capsys, *base)
    _, audited = run(capsys, *base, "--space-audit")
    assert json.loads(plain)["solution"] == json.loads(audited)["solution"]


def test_solve_functional_exact(tmp_path, capsys):
    code, out = run(capsys, "gen", "functional", "--n", "9", "--seed", "4")
    assert code == 0
    path = write(tmp_path, "f.dg", out)
    code, out = run(
        capsys, "solve", "--problem", "vc", "--algorithm", "functional",
        "--input", path, "--compare-exact",
    )
    assert code == 0
    report = json.loads(out)
    assert report["valid"] is True
    assert report["ratio"] == 1.0


def test_solve_text_format(tmp_path, capsys):
    path = write(tmp_path, "tri.gr", TRI)
    code, out = run(
        capsys, "solve", "--problem", "vc", "--algorithm", "bounded-degree",
        "--input", path, "--format", "text",
    )
    assert code == 0
    lines = out.splitlines()
    assert "size: 2" in lines
    assert "valid: true" in lines


def test_kernel_cmd(tmp_path, capsys):
    star = write(tmp_path, "star.gr", "p 4 3\ne 1 2\ne 1 3\ne 1 4\n")
    code, out = run(capsys, "kernel", "--problem", "vc", "--k", "1", "--input", star)
    assert code == 0
    report = json.loads(out)
    assert report["verdict"] == "KERNEL"
    assert report["vertices"] == [1]
    fam = write(tmp_path, "fam.hg", FAM)
    code, out = run(capsys, "kernel", "--problem", "hs", "--k", "1", "--input", fam)
    assert code == 0
    report = json.loads(out)
    assert report["kernel"]["sets"] == [[1, 2], [2, 3], [3, 4]]
    code, out = run(capsys, "kernel", "--problem", "hs", "--k", "0", "--input", fam)
    assert code == 2
    assert json.loads(out)["verdict"] == "NO"


def test_exact_cmd(tmp_path, capsys):
    path = write(tmp_path, "tri.gr", TRI)
    code, out = run(capsys, "exact", "--problem", "vc", "--input", path)
    assert code == 0
    report = json.loads(out)
    assert report["opt"] == 2
    assert report["solution"] == [1, 2]
    big = write(tmp_path, "big.gr", "p 17 0\n")
    code, _ = run(capsys, "exact", "--problem", "vc", "--input", big)
    assert code == 1


def test_validate_cmd(tmp_path, capsys):
    path = write(tmp_path, "tri.gr", TRI)
    code, out = run(
        capsys, "validate", "--problem", "vc", "--candidate", "1", "--input", path
    )
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is False
    assert report["witness"] == ["uncovered-edge", [2, 3]]
    code, out = run(
        capsys, "validate", "--problem", "vc", "--candidate", "1,2", "--input", path
    )
    assert code == 0
    assert json.loads(out)["ok"] is True
    code, _ = run(capsys, "validate", "--problem", "vc", "--input", path)
    assert code == 1


def test_gen_deterministic_and_valid(capsys):
    checks = [
        (["gen", "tree", "--n", "10", "--seed", "1"], "tree", None, load_graph),
        (["gen", "c4free", "--n", "9", "--seed", "2"], "c4free", None, load_graph),
        (["gen", "degenerate", "--n", "10", "--d", "2", "--seed", "3"],
         "degenerate", 2, load_graph),
        (["gen", "regular", "--n", "8", "--d", "3", "--seed", "7"],
         "regular", 3, load_graph),
        (["gen", "tournament", "--n", "6", "--seed", "4"], "tournament", None,
         load_digraph),
        (["gen", "functional", "--n", "8", "--seed", "5"], "functional", None,
         load_digraph),
    ]
    for argv, kind, parameter, loader in checks:
        code, first = run(capsys, *argv)
        assert code == 0
        code, second = run(capsys, *argv)
        assert first == second
        ok, witness = exact.validate(kind, loader(first), parameter=parameter)
        assert ok, (kind, witness)


def test_gen_infeasible(capsys):
    code, _ = run(capsys, "gen", "regular", "--n", "7", "--d", "3")
    assert code == 1
    code, _ = run(capsys, "gen", "regular", "--n", "4", "--d", "4")
    assert code == 1
    code, _ = run(capsys, "gen", "degenerate", "--n", "5")
    assert code == 1


def test_bench_cmd(capsys):
    code, out = run(
        capsys, "bench", "--problem", "vc", "--algorithm", "bounded-degree",
        "--kind", "regular", "--n", "12", "--d", "3", "--runs", "3",
    )
    assert code == 0
    report = json.loads(out)
    assert len(report["runs"]) == 3
    assert all(row["valid"] for row in report["runs"])
    assert report["aggregate"]["no_verdicts"] == 0
    assert report["aggregate"]["mean_size"] > 0
    code, _ = run(
        capsys, "bench", "--problem", "hs", "--algorithm", "sqrt",
        "--kind", "tree", "--n", "5",
    )
    assert code == 1
    code, _ = run(
        capsys, "bench", "--problem", "vc", "--algorithm", "tree",
        "--kind", "tournament", "--n", "5",
    )
    assert code == 1


def test_parse_error_exit(tmp_path, capsys):
    bad = write(tmp_path, "bad.gr", "p 3 1\nx 1 2\n")
    code, _ = run(capsys, "solve", "--problem", "vc", "--algorithm",
                  "bounded-degree", "--input", bad)
    assert code == 1
