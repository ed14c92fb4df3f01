import json

import pytest

from ppwb.cli import main

PP24_TEXT = "5 3 3 2\n5 1 1\n3 1\n"
PP30_TEXT = "4 3 2 2\n4 3 1 1\n2 2 1 1\n1 1\n1 1\n"
ASM6_TEXT = "0 0 1 0 0 0\n1 0 -1 1 0 0\n0 0 1 -1 0 1\n0 1 -1 1 0 0\n0 0 1 -1 1 0\n0 0 0 1 0 0\n"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_lgv(capsys):
    code, out, _ = run(capsys, "count", "--class", "1", "--box", "2,2,2", "--method", "lgv")
    assert code == 0 and out == "20\n"


def test_count_kasteleyn(capsys):
    code, out, _ = run(
        capsys, "count", "--class", "1", "--box", "2,2,2", "--method", "kasteleyn"
    )
    assert code == 0 and out == "20\n"


def test_count_brute(capsys):
    code, out, _ = run(capsys, "count", "--class", "1", "--box", "1,1,1", "--method", "brute")
    assert code == 0 and out == "2\n"


def test_count_formula_class10(capsys):
    code, out, _ = run(capsys, "count", "--class", "10", "--a", "3")
    assert code == 0 and out == "7\n"


def test_count_is_deterministic(capsys):
    first = run(capsys, "count", "--class", "5", "--box", "2,2,2", "--method", "brute")
    second = run(capsys, "count", "--class", "5", "--box", "2,2,2", "--method", "brute")
    assert first == second


def test_count_usage_errors(capsys):
    code, _, err = run(capsys, "count", "--class", "2", "--box", "2,2,2", "--method", "lgv")
    assert code == 2 and "class 1" in err
    code, _, _ = run(capsys, "count", "--class", "11", "--a", "1")
    assert code == 2
    code, _, _ = run(capsys, "count", "--class", "1", "--box", "2,2")
    assert code == 2


def test_count_brute_respects_cell_guard(capsys, monkeypatch):
    monkeypatch.setenv("PPWB_MAX_CELLS", "3")
    code, _, err = run(capsys, "count", "--class", "1", "--box", "2,2,2", "--method", "brute")
    assert code == 2 and "PPWB_MAX_CELLS" in err
    monkeypatch.setenv("PPWB_MAX_CELLS", "8")
    code, out, _ = run(capsys, "count", "--class", "1", "--box", "2,2,2", "--method", "brute")
    assert code == 0 and out == "20\n"


def test_gf_class1(capsys):
    code, out, _ = run(capsys, "gf", "--class", "1", "--box", "1,1,2")
    assert code == 0 and out == "1 + q + q^2\n"


def test_gf_class2(capsys):
    code, out, _ = run(capsys, "gf", "--class", "2", "--a", "1", "--c", "1")
    assert code == 0 and out == "1 + q\n"


def test_gf_class4_at_q1(capsys):
    code, out, _ = run(capsys, "gf", "--class", "4", "--a", "2", "--weight", "half", "--at-q", "1")
    assert code == 0 and out == "5\n"


def test_gf_invalid_pairings(capsys):
    assert run(capsys, "gf", "--class", "3", "--a", "2", "--weight", "half")[0] == 2
    assert run(capsys, "gf", "--class", "4", "--a", "2", "--weight", "size")[0] == 2
    assert run(capsys, "gf", "--class", "5", "--box", "2,2,2")[0] == 2


@pytest.mark.parametrize("suite", ["box", "classes", "trace", "schur", "dimer", "gogmagog"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", "--suite", suite)
    assert code == 0
    assert f"suite {suite}: PASS" in out
    assert "FAIL" not in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "box", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["suite"] == "box"
    assert data["pass"] is True
    ids = [c["id"] for c in data["checks"]]
    assert ids == sorted(ids)
    for c in data["checks"]:
        assert set(c) == {"id", "status", "expected", "actual"}
        assert c["status"] == "pass"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2 and "unknown suite" in err


def test_verify_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "trace", "--json")
    b = run(capsys, "verify", "--suite", "trace", "--json")
    assert a == b


def test_bijection_pp_ssyt_worked_example(tmp_path, capsys):
    f = tmp_path / "pp.txt"
    f.write_text(PP24_TEXT)
    code, out, _ = run(
        capsys, "bijection", "--name", "pp-ssyt", "--input", str(f), "--box", "3,4,6",
        "--roundtrip",
    )
    assert code == 0
    assert out.splitlines()[:3] == ["1 1 2 4", "2 3 3 7", "5 6 6 8"]
    assert out.splitlines()[-1] == "roundtrip ok"


def test_bijection_asm_mt_worked_example(tmp_path, capsys):
    f = tmp_path / "asm.txt"
    f.write_text(ASM6_TEXT)
    code, out, _ = run(capsys, "bijection", "--name", "asm-mt", "--input", str(f), "--roundtrip")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 2 3 4 5 6"
    assert lines[5] == "4"
    assert lines[-1] == "roundtrip ok"


def test_bijection_stanley_statistics(tmp_path, capsys):
    f = tmp_path / "pp30.txt"
    f.write_text(PP30_TEXT)
    code, out, _ = run(capsys, "bijection", "--name", "stanley", "--input", str(f), "--roundtrip")
    assert code == 0
    rows = [line.split() for line in out.splitlines() if line != "roundtrip ok"]
    total = sum(int(v) for _, _, v in rows)
    weighted = sum((int(i) + int(j) - 1) * int(v) for i, j, v in rows)
    assert total == 8  # trace of the input array
    assert weighted == 30  # its size


def test_bijection_pp_paths_and_tiling(tmp_path, capsys):
    f = tmp_path / "pp.txt"
    f.write_text("2 1\n1\n")
    code, out, _ = run(
        capsys, "bijection", "--name", "pp-paths", "--input", str(f), "--box", "2,2,2",
        "--roundtrip",
    )
    assert code == 0 and out.splitlines()[-1] == "roundtrip ok"
    code, out, _ = run(
        capsys, "bijection", "--name", "pp-tiling", "--input", str(f), "--box", "2,2,2",
        "--roundtrip",
    )
    assert code == 0 and out.splitlines()[-1] == "roundtrip ok"


def test_bijection_parse_error_has_diagnostic(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("1 2\n")
    code, _, err = run(
        capsys, "bijection", "--name", "pp-ssyt", "--input", str(f), "--box", "2,2,2"
    )
    assert code == 2 and "row 1, column 2" in err


def test_bijection_asm_rejects_non_asm(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("-1\n")
    code, _, err = run(capsys, "bijection", "--name", "asm-mt", "--input", str(f))
    assert code == 2 and "alternating sign" in err


def test_conjecture_equal(capsys):
    code, out, _ = run(capsys, "conjecture", "--m", "0", "--n", "3", "--k", "3")
    assert code == 0
    assert out.splitlines()[-1] == "EQUAL"


def test_conjecture_totals(capsys):
    code, out, _ = run(capsys, "conjecture", "--m", "1", "--n", "2", "--k", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert sum(int(v) for _, _, v in data["magog"]) == 5
    assert data["equal"] is True


def test_conjecture_invalid_params(capsys):
    code, _, _ = run(capsys, "conjecture", "--m", "0", "--n", "2", "--k", "3")
    assert code == 2
