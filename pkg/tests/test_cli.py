import json

import pytest

from crossfold.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_gamma_text(capsys):
    code, out, _ = run(capsys, "gamma", "--n", "3")
    assert code == 0
    assert "crossings   2" in out and "C_a=8 C_b=8" in out and "formulas match: yes" in out


def test_gamma_1(capsys):
    code, doc = run_json(capsys, "gamma", "--n", "1")
    assert code == 0 and doc["crossings"] == 0


def test_gamma_10_json(capsys):
    code, doc = run_json(capsys, "gamma", "--n", "10")
    assert code == 0
    assert doc["crossings"] == doc["crossing_formula"] == 4 ** 9 - 112 * 2 ** 7
    assert doc["match"] is True


def test_gamma_check_good(capsys):
    code, doc = run_json(capsys, "gamma", "--n", "5", "--check-good")
    assert code == 0 and doc["good"] is True and doc["violations"] == []


def test_gamma_svg(capsys, tmp_path):
    path = tmp_path / "g.svg"
    code, _, _ = run(capsys, "gamma", "--n", "4", "--svg", str(path))
    assert code == 0 and "crossings = 20" in path.read_text()


@pytest.mark.parametrize("argv", [
    ("gamma", "--n", "0"),
    ("gamma", "--n", "17"),
    ("gamma", "--n", "11", "--check-good"),
    ("gamma", "--n", "9", "--svg", "x.svg"),
    ("fq-upper", "--n", "2"),
    ("congestion", "--n", "13", "--census"),
    ("congestion", "--n", "1"),
    ("bounds", "--n", "1"),
    ("render", "--gamma", "9", "--out", "x.svg"),
    ("verify", "--max-n", "13"),
    ("verify", "--max-n", "2"),
])
def test_guards_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_render_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "render", "--d3", "--out", str(tmp_path / "missing" / "d3.svg"))
    assert code == 2 and "cannot write" in err


def test_render_files(capsys, tmp_path):
    for argv, want in ((("--d3",), "crossings = 4"), (("--gamma", "3"), "crossings = 2")):
        path = tmp_path / "out.svg"
        code, out, _ = run(capsys, "render", *argv, "--out", str(path))
        assert code == 0 and out.startswith("wrote")
        assert want in path.read_text()


def test_fq_upper(capsys):
    code, doc = run_json(capsys, "fq-upper", "--n", "4")
    assert code == 0 and doc["assembled"] == doc["formula"] == 32
    nb = doc["neighborhood"]
    assert (nb["nu_red"], nb["nu_blue"], nb["nu_mixed"]) == (0, 2, 0)
    code, doc = run_json(capsys, "fq-upper", "--n", "3")
    assert doc["assembled"] == 4 and "neighborhood" not in doc
    code, doc = run_json(capsys, "fq-upper", "--n", "12")
    assert code == 0 and doc["match"]


def test_congestion(capsys):
    code, doc = run_json(capsys, "congestion", "--n", "3", "--census")
    assert code == 0
    assert doc["classes"]["0"]["cg"] == 2 and doc["classes"]["t"]["cg"] == 6
    assert doc["bound1_holds"] is False
    code, out, _ = run(capsys, "congestion", "--n", "3", "--census")
    assert "expected erratum" in out
    code, doc = run_json(capsys, "congestion", "--n", "4", "--census")
    assert doc["classes"]["0"]["cg"] == doc["classes"]["t"]["cg"] == 10 and doc["bound1_holds"]


def test_congestion_formula_agrees_with_census(capsys):
    for n in (5, 8):
        _, census = run_json(capsys, "congestion", "--n", str(n), "--census")
        _, formula = run_json(capsys, "congestion", "--n", str(n))
        census.pop("source"), formula.pop("source")
        assert census == formula


def test_bounds(capsys):
    code, doc = run_json(capsys, "bounds", "--n", "3")
    assert code == 0 and doc["upper_fq"] == "4" and doc["small_case_exact"] == "4"
    _, doc = run_json(capsys, "bounds", "--n", "10")
    assert doc["upper_fq"] == "343808" and float(doc["lower_fq_paper"]["value"]) > 0
    _, doc = run_json(capsys, "bounds", "--n", "2")
    assert doc["small_case_exact"] == "0"
    code, out, _ = run(capsys, "bounds", "--n", "5")
    assert code == 0 and "VIOLATED" in out


@pytest.mark.parametrize("argv", [("gamma", "--n", "6"), ("fq-upper", "--n", "9"), ("bounds", "--n", "7"),
                                  ("congestion", "--n", "6", "--census")])
def test_json_is_byte_deterministic(capsys, argv):
    first = run(capsys, *argv, "--json")[1]
    second = run(capsys, *argv, "--json")[1]
    assert first == second


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    assert out.count("expected-erratum") == 2 and "exit code 0" in out


def test_verify_json(capsys):
    code, doc = run_json(capsys, "verify", "--max-n", "5")
    assert code == 0 and doc["exit_code"] == 0
    assert {c["status"] for c in doc["checks"]} == {"pass", "expected-erratum"}


def test_help_lists_subcommands(capsys):
    with pytest.raises(SystemExit):
        main(["--help"])
    out = capsys.readouterr().out
    for name in ("gamma", "fq-upper", "congestion", "bounds", "render", "verify"):
        assert name in out
